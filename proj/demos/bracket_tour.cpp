// Walk through a few brackets of the wedge model and the Killing form.

#include <iostream>

#include "e8/lie/algebra.hpp"
#include "e8/wedge/model.hpp"

using namespace e8;
using namespace e8::wedge_model;
using G = Gaussian;
using W = Wedge<G>;
using M = Matrix9<G>;

int main()
{
    const auto h = from_D<G>(M::unit(1, 1) - M::unit(4, 4));
    const auto u = from_u<G>(W::basis({1, 2, 3}));
    const auto u2 = from_u<G>(W::basis({4, 5, 6}));
    const auto v = from_v<G>(W::basis({1, 2, 3}));

    std::cout << "[E11 - E44, (0, e123, 0)] = " << bracket(h, u).to_string() << "\n";
    std::cout << "[(0, e123, 0), (0, e456, 0)] = " << bracket(u, u2).to_string() << "\n";
    std::cout << "[(0, e123, 0), (0, 0, e123)] = " << bracket(u, v).to_string() << "\n";

    std::cout << "B(h, h) = " << killing(h, h) << "\n";
    std::cout << "B(u, v) = " << killing(u, v) << "\n";

    // the closed form against tr(ad x ad y) from the structure constants
    const auto& t = table<G>();
    std::cout << "tr(ad h ad h) = " << killing_adtrace(t, coords(h), coords(h)) << "\n";
    std::cout << "tr(ad u ad v) = " << killing_adtrace(t, coords(u), coords(v)) << "\n";
    std::cout << "nonzero structure constants (i < j): " << t.nonzeros_upper() << "\n";

    const auto w = w4_apply(u + from_D<G>(M::unit(1, 2)));
    std::cout << "w4((E12, e123, 0)) = " << w.to_string() << "\n";
}
