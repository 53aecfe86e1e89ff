#include <stdio.h>
#include <string.h>
#include "ffheight.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, ffh_last_error()); return 1; } } while (0)

int main(void) {
    FfhInstance *inst = NULL;
    const char *spec = "{\"ambient\": {\"kind\": \"affine\", \"n\": 2}, \"variables\": [\"x\", \"y\"],"
                       " \"q\": [3, 5, 7], \"equations\": [\"y - x^2\"]}";
    CHECK(ffh_instance_from_json(spec, &inst) == FFH_STATUS_OK);
    uint64_t n = 0;
    CHECK(ffh_census_count(inst, 4, 5, 0, &n) == FFH_STATUS_OK);
    CHECK(n == 25);
    int64_t dim = 0;
    double slope = 0;
    CHECK(ffh_census_dim(inst, 3, NULL, 0, 0, &dim, &slope) == FFH_STATUS_OK);
    CHECK(dim == 2);
    CHECK(ffh_census_count(inst, 6, 7, 5, &n) == FFH_STATUS_BUDGET);
    CHECK(strlen(ffh_last_error()) > 0);
    ffh_instance_free(inst);

    FfhPoly *p = NULL;
    CHECK(ffh_poly_parse("t*x^2 - y*z", 5, &p) == FFH_STATUS_OK);
    char *s = NULL;
    CHECK(ffh_poly_to_string(p, &s) == FFH_STATUS_OK);
    printf("%s\n", s);
    ffh_string_free(s);
    ffh_poly_free(p);
    CHECK(ffh_poly_parse("x^", 5, &p) == FFH_STATUS_PARSE);

    size_t h = 0;
    CHECK(ffh_lattice_height("[[\"t\", \"1\", \"0\"], [\"0\", \"t\", \"1\"]]", 5, &h) == FFH_STATUS_OK);
    CHECK(h == 2);
    size_t count = 0;
    uint64_t q = 0;
    CHECK(ffh_pell_family_count(2, 0, &count, &q) == FFH_STATUS_OK);
    CHECK(count == 4);
    printf("version %s, family prime %llu\n", ffh_version(), (unsigned long long)q);
    return 0;
}
