// Dimensions of the fixed subalgebras of the compact form under the order-4 automorphisms.

#include <iostream>

#include "e8/io/files.hpp"

int main()
{
    const std::pair<const char*, const char*> cases[] = {
        {"wedge", "w4"}, {"wedge", "w4-squared"}, {"freudenthal", "upsilon4"}, {"freudenthal", "upsilon"}, {"freudenthal", "mu4"}};
    for (const auto& [model, a] : cases) {
        const auto b = e8::io::compute_fixed(model, a);
        std::cout << model << " " << a << ": " << b.vectors.size() << "\n";
    }
}
