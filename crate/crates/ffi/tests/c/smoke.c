#include <stdio.h>
#include <string.h>

#include "crossings.h"

#define EXPECT(cond)                                            \
    do {                                                        \
        if (!(cond)) {                                          \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                           \
        }                                                       \
    } while (0)

int main(void) {
    CrossingsPermutation *s = NULL, *t = NULL;
    CrossingsStats st;
    uint32_t buf[8];

    EXPECT(crossings_perm_parse("24135867", &s) == CROSSINGS_STATUS_OK);
    EXPECT(crossings_theta(s, &t) == CROSSINGS_STATUS_OK);
    EXPECT(crossings_perm_len(t) == 8);
    EXPECT(crossings_perm_values(t, buf, 8) == CROSSINGS_STATUS_OK);
    {
        const uint32_t want[8] = {7, 8, 5, 3, 4, 6, 2, 1};
        EXPECT(memcmp(buf, want, sizeof want) == 0);
    }
    crossings_perm_free(t);
    crossings_perm_free(s);

    EXPECT(crossings_perm_parse("4735126", &s) == CROSSINGS_STATUS_OK);
    EXPECT(crossings_perm_stats(s, &st) == CROSSINGS_STATUS_OK);
    EXPECT(st.crs == 3 && st.nes == 3 && st.inv == 12);
    EXPECT(crossings_theta(s, &t) == CROSSINGS_STATUS_DOMAIN);
    EXPECT(strlen(crossings_last_error()) > 0);
    crossings_perm_free(s);

    CrossingsPoly *p = NULL;
    int64_t c = 0;
    EXPECT(crossings_distribution(5, "312,213", &p) == CROSSINGS_STATUS_OK);
    EXPECT(crossings_poly_len(p) == 3);
    EXPECT(crossings_poly_coeff(p, 0, &c) == CROSSINGS_STATUS_OK && c == 11);
    char *text = crossings_poly_to_string(p);
    EXPECT(text && strcmp(text, "11 + 4*q + q^2") == 0);
    crossings_string_free(text);
    crossings_poly_free(p);

    puts("ok");
    return 0;
}
