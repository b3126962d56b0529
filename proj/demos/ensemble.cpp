// Vector (phi = z) pair at rest overall, smeared over the directions of the
// relative momentum. Alice only counts particles moving into z > 0.

#include <iostream>

#include "diracepr/diracepr.hpp"

using namespace diracepr;

int main()
{
    double const m = 1.0;
    double const kmag = 2.0;
    Rng rng(11);

    std::vector<EnsembleEntry> entries;
    for (int i = 0; i < 200; ++i)
    {
        Vec3 const rel = kmag * rng.unit_vector();
        FourVector const p = on_shell(rel, m);
        FourVector const k = on_shell(-1.0 * rel, m);
        entries.push_back({rng.uniform(), vector_kernel(k, p, Polarization::spatial({0.0, 0.0, 1.0}), m)});
    }
    EnsembleState const state = ensemble(entries);

    Direction const a = Direction::spherical(0.3, 0.0);
    Direction const b = Direction::spherical(2.0, 1.0);
    auto const upper = region_mask(state, Species::particle,
                                   [](FourVector const& p) { return p[3] > 0; });
    EntryMask const all(state.size(), true);

    std::cout << "full ensemble   " << correlate_oracle(state, a, b).value << '\n'
              << "p_z > 0 region  " << correlate_oracle(state, a, b, upper, all).value << '\n'
              << "triplet at rest " << correlation_triplet_nonrel({0.0, 0.0, 1.0}, a, b) << '\n';
}
