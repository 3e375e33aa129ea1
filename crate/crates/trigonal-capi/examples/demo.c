/* Minimal consumer of the C ABI: run the bridge checks at genus 4 and
 * print each row.
 *
 * Build from the repository root:
 *   cargo build -p trigonal-capi
 *   cc crates/trigonal-capi/examples/demo.c \
 *      -Icrates/trigonal-capi/include \
 *      target/debug/libtrigonal_capi.a -lpthread -ldl -lm -o demo
 */

#include <stdio.h>
#include <stdlib.h>

#include "trigonal_capi.h"

static void check(TrigStatus st, const char *what) {
    if (st != TRIG_STATUS_OK) {
        fprintf(stderr, "%s failed (%s): %s\n", what, trig_status_name(st),
                trig_last_error_message());
        exit(1);
    }
}

int main(void) {
    printf("trigonal-capi %s\n", trig_version());

    TrigReport *report = NULL;
    check(trig_verify(4, "bridge", trig_default_seed(), &report), "trig_verify");

    size_t count = 0;
    check(trig_report_check_count(report, &count), "check_count");

    for (size_t i = 0; i < count; i++) {
        char *name = NULL;
        TrigCheckStatus row;
        check(trig_report_check_name(report, i, &name), "check_name");
        check(trig_report_check_status(report, i, &row), "check_status");
        printf("  %-6s %s\n",
               row == TRIG_CHECK_STATUS_PASS ? "pass"
               : row == TRIG_CHECK_STATUS_FAIL ? "fail"
                                               : "info",
               name);
        trig_string_free(name);
    }

    bool passed = false;
    check(trig_report_passed(report, &passed), "passed");
    printf("summary: %s\n", passed ? "pass" : "fail");

    trig_report_free(report);
    return passed ? 0 : 1;
}
