#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "qcenter/quad_system.hpp"

namespace qcenter {

// Deterministic random source. Bounded draws use modulo reduction so that
// sequences are identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}
    uint64_t next() { return eng_(); }
    long int_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }
    bool coin() { return next() & 1; }
    Rational rational(long max_num, long max_den) {
        return rat(int_in(-max_num, max_num), int_in(1, max_den));
    }
    Rational nonzero_rational(long max_num, long max_den) {
        for (;;) {
            Rational r = rational(max_num, max_den);
            if (r != 0) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

enum class Family { PlacedPoints, Hamiltonian, Reversible, CanonicalPaper, Random };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

QuadSystem generate_family(Family f, Rng& rng);
QuadSystem random_system(Rng& rng, long max_num = 6, long max_den = 3);

// The canonical normal forms used in the classification proofs.
QuadSystem paper_system_5(const Rational& c, const Rational& d, const Rational& h, const Rational& e,
                          const Rational& f, const Rational& m);
QuadSystem paper_system_10(const Rational& c, const Rational& d, const Rational& h, const Rational& e);
QuadSystem paper_system_24(const Rational& c, const Rational& d);
QuadSystem paper_system_25(const Rational& a, const Rational& b, const Rational& c);
QuadSystem paper_system_29(const Rational& d, const Rational& h, const Rational& k, const Rational& e);
QuadSystem paper_system_33(const Rational& d, const Rational& k);
QuadSystem paper_system_45(const Rational& h, const Rational& f, const Rational& m, const Rational& n);
QuadSystem paper_system_58(const Rational& c, const Rational& d, const Rational& e);
QuadSystem paper_system_67(const Rational& g, const Rational& e, const Rational& f, const Rational& l,
                           const Rational& m);
QuadSystem paper_system_89(const Rational& c, const Rational& e, const Rational& f, const Rational& m);
QuadSystem paper_system_91(const Rational& c, const Rational& e, const Rational& f, const Rational& n);

// One of the eleven normal forms at random parameters; reports the
// equation id when asked.
QuadSystem random_paper_system(Rng& rng, int* which = nullptr);

// Image under a random invertible affine map. With unimodular = true the
// linear part is an integer matrix of determinant +1 (values of affine
// invariants are then preserved exactly, not just up to a factor).
QuadSystem random_affine_image(const QuadSystem& sys, Rng& rng, bool unimodular = false);

// Constructions hitting the mu = 0 and mu = D = 0 strata exactly.
QuadSystem random_mu_zero_system(Rng& rng);
QuadSystem random_mu_d_zero_system(Rng& rng);

}  // namespace qcenter
