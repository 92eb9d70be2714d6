// Proportions of partitions of n whose number of t-hooks is a mod 3, next to the
// limiting constants c_t(a,3;n), for t = 2 and t = 4.

#include <iostream>

#include <hookdist/distributions.hpp>
#include <hookdist/hooks.hpp>
#include <hookdist/report.hpp>

int main()
{
    using namespace hookdist;
    for (int t : {2, 4}) {
        const CycSeries han = han_series(t, 3, 2400);
        std::cout << "t=" << t << "\n";
        for (std::size_t n : {120, 600, 1200, 2400}) {
            std::cout << "  n=" << n;
            for (int a = 0; a < 3; ++a) {
                const auto c = ct_constant(t, a, 3, static_cast<std::int64_t>(n)).value();
                std::cout << "  a=" << a << ": " << render_decimal(psi_ratio(han, a, n), 4) << " (limit "
                          << render_decimal(c, 4) << ")";
            }
            std::cout << "\n";
        }
    }
}
