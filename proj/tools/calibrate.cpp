// Reproduces the frozen-constant fits: runs every inequality suite on the
// calibration seed and prints the observed extremes next to the constants
// frozen in frozen.hpp. Freezing policy: observed extreme times a 1.5x margin
// (the lower bound is divided by it).

#include <cmath>
#include <cstdio>

#include "fraclab/frozen.hpp"
#include "fraclab/suites.hpp"

int main() {
    using namespace fraclab;
    const std::uint64_t seed = FrozenConstants::kCalibrationSeed;
    const int cases = FrozenConstants::kCalibrationCases;

    // each suite scores rows as ratio-to-cap, so observed = worst * cap
    {
        const auto r = run_sobolev_suite(seed, cases);
        std::printf("sobolev      observed max %.6f   frozen %.3f\n",
                    r.worst * FrozenConstants::sobolev_c, FrozenConstants::sobolev_c);
    }
    {
        const auto r = run_tl_suite(seed, cases);
        const char* names[4] = {"tl-rst ", "tl-wld ", "tl-wld2", "tl-sup "};
        const double frozen[4] = {FrozenConstants::tl_rst_c, FrozenConstants::tl_wld_c,
                                  FrozenConstants::tl_wld2_c, FrozenConstants::tl_sup_c};
        for (int k = 0; k < 4; ++k) {
            double worst = 0.0;
            for (const auto& row : r.reports[k].rows) worst = std::max(worst, row.raw);
            std::printf("%s      observed max %.6f   frozen %.3f\n", names[k], worst, frozen[k]);
        }
    }
    {
        const auto r = run_t343_suite(seed, cases);
        double worst = 0.0;
        for (const auto& row : r.reports[0].rows) worst = std::max(worst, row.raw);
        std::printf("aux6         observed max %.6f   frozen %.3f\n", worst,
                    FrozenConstants::aux6_c);
    }
    {
        const auto r = run_seq_suite(seed, cases);
        double lo = HUGE_VAL, hi = 0.0, worst343 = 0.0;
        for (const auto& row : r.reports[0].rows) lo = std::min(lo, row.raw);
        for (const auto& row : r.reports[1].rows) hi = std::max(hi, row.raw);
        for (const auto& row : r.reports[2].rows) worst343 = std::max(worst343, row.raw);
        std::printf("appendixb lo observed min %.6f   frozen %.3f\n", lo,
                    FrozenConstants::appendixb_c_lo);
        std::printf("appendixb hi observed max %.6f   frozen %.3f\n", hi,
                    FrozenConstants::appendixb_c_hi);
        std::printf("seq343       observed max %.6f   frozen %.3f\n", worst343,
                    FrozenConstants::seq343_c);
    }
    return 0;
}
