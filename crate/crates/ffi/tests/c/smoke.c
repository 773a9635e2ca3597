#include <stdio.h>
#include <string.h>

#include "toric_brauer.h"

static int check(int ok, const char *what) {
    if (!ok) {
        const char *msg = tb_last_error();
        fprintf(stderr, "failed: %s (%s)\n", what, msg ? msg : "no message");
    }
    return ok ? 0 : 1;
}

int main(void) {
    int failures = 0;
    TbFan *fan = NULL;
    TbReport *report = NULL;
    int64_t params[] = {1, 3};
    char *text = NULL;

    failures += check(tb_fan_generate("quotient_cone", params, 2, &fan) == TB_STATUS_OK, "generate");
    failures += check(tb_report_compute(fan, &report) == TB_STATUS_OK, "compute");
    failures += check(tb_report_group_torsion_len(report, TB_GROUP_CLASS_GROUP) == 1, "torsion length");

    int64_t order = 0;
    failures += check(tb_report_group_torsion(report, TB_GROUP_CLASS_GROUP, 0, &order) == TB_STATUS_OK, "torsion");
    failures += check(order == 3, "order 3");

    failures += check(tb_report_to_text(report, &text) == TB_STATUS_OK, "text");
    failures += check(strstr(text, "Cl = Z/3\n") != NULL, "text content");
    tb_string_free(text);

    TbFan *bad = NULL;
    failures += check(tb_fan_parse("{\"rank\": 2,", false, &bad) == TB_STATUS_SYNTAX, "syntax status");
    failures += check(tb_last_error() != NULL, "error message");

    tb_report_free(report);
    tb_fan_free(fan);
    if (failures == 0) {
        printf("ok\n");
    }
    return failures;
}
