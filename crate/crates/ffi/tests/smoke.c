#include <stdio.h>
#include <string.h>
#include "gtskew.h"

int main(void) {
    int64_t lambda[] = {1, 0};
    GtskewShape *s = NULL;
    if (gtskew_shape_new(1, 1, 0, lambda, 2, NULL, 0, &s) != GTSKEW_STATUS_OK) return 1;
    size_t dim = 0;
    if (gtskew_shape_dimension(s, &dim) != GTSKEW_STATUS_OK || dim != 2) return 2;
    GtskewCurrents *c = NULL;
    if (gtskew_currents_new(s, &c) != GTSKEW_STATUS_OK) return 3;
    bool passed = false;
    char *report = NULL;
    if (gtskew_currents_verify(c, 5, 4, 0, &passed, &report) != GTSKEW_STATUS_OK || !passed) return 4;
    gtskew_string_free(report);
    gtskew_currents_free(c);
    gtskew_shape_free(s);
    int64_t bad[] = {0, 1};
    if (gtskew_shape_new(1, 1, 0, bad, 2, NULL, 0, &s) != GTSKEW_STATUS_INVALID_SHAPE) return 5;
    if (gtskew_last_error() == NULL) return 6;
    printf("gtskew %s ok\n", gtskew_version());
    return 0;
}
