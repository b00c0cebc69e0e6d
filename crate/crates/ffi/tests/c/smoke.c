#include <stdio.h>
#include <string.h>

#include "apolar.h"

int main(void) {
    ApolarPolynomial *f = NULL;
    if (apolar_polynomial_parse("X^3YZ^4TU^2V^6(X^2YZT^2U-V^7)", NULL, 0, &f) != APOLAR_STATUS_OK) {
        return 1;
    }
    bool ci = false;
    if (apolar_is_complete_intersection(f, &ci) != APOLAR_STATUS_OK || !ci) {
        return 2;
    }
    char *json = NULL;
    if (apolar_classify_json(f, true, &json) != APOLAR_STATUS_OK) {
        return 3;
    }
    int ok = strstr(json, "\"reason\":\"CI\"") != NULL;
    apolar_string_free(json);
    apolar_polynomial_free(f);

    ApolarPolynomial *g = NULL;
    if (apolar_polynomial_parse("X^2 + Y", NULL, 0, &g) != APOLAR_STATUS_NOT_HOMOGENEOUS || g != NULL) {
        return 4;
    }
    if (apolar_last_error() == NULL) {
        return 5;
    }
    printf("%s\n", ok ? "ok" : "bad");
    return ok ? 0 : 6;
}
