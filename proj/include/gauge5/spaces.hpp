#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gauge5/abelian_group.hpp"
#include "gauge5/arith.hpp"
#include "gauge5/lie.hpp"
#include "gauge5/localization.hpp"

namespace gauge5::spaces {

/// Closed oriented 5-manifold with pi_1 = Z/c and H_2 free of rank m-1.
struct ManifoldSpec {
    arith::Int c = 2;
    int m = 1;
    bool spin = true;
    bool stably_parallelizable = false;
    bool single_top_cell = false;

    /// Throws std::invalid_argument unless c >= 2 and m >= 1.
    void validate() const;

    /// Parses "key = value" lines (keys c, m, spin, stably_parallelizable,
    /// single_top_cell; '#' comments; booleans true/false/yes/no/1/0).
    static ManifoldSpec parse_config(std::string_view text);
    std::string serialize() const;

    friend bool operator==(const ManifoldSpec&, const ManifoldSpec&) = default;
};

/// H_0 .. H_5 of M.
std::array<FGAbelianGroup, 6> homology(const ManifoldSpec& M);

/// [M, BG] = Z/c, valid when pi_4(G) vanishes in ctx.
FGAbelianGroup bundle_classes(const ManifoldSpec& M, const lie::LieGroupSpec& G, const Localization& ctx);

/// pi_n(P^n(c)) for c odd: Z/c at n = 3, 0 for n >= 4.
FGAbelianGroup pi_moore_self(int n, arith::Int c);
/// pi_6(P^4(c)) and pi_7(P^5(c)) for c odd: Z/c ⊕ Z/(3,c).
FGAbelianGroup pi6_P4(arith::Int c);
FGAbelianGroup pi7_P5(arith::Int c);
/// Order of the image of the suspension pi_6(P^4(c)) -> pi_7(P^5(c)), c odd.
arith::Int suspension_image_order(arith::Int c);

enum class CoefficientTarget { S3At4, S4At5, P3At4, P4At5 };
/// pi_k(X; Z/c) for the four supported (X, k), c odd.
FGAbelianGroup pi_with_coefficients(CoefficientTarget target, arith::Int c);
CoefficientTarget parse_coefficient_target(std::string_view text);

struct WedgeAtom {
    enum class Kind { Sphere, Moore, Opaque };
    Kind kind = Kind::Sphere;
    int n = 2;           // dimension: S^n, or P^n(c) = S^(n-1) ∪_c e^n
    arith::Int c = 0;    // Moore only
    std::string tag;     // Opaque only
    std::map<int, FGAbelianGroup> homology;  // Opaque only: reduced homology by degree

    friend bool operator==(const WedgeAtom&, const WedgeAtom&) = default;
};

/// Formal wedge. Atoms are kept in presentation order; equality ignores order.
class WedgeExpr {
public:
    WedgeExpr() = default;
    explicit WedgeExpr(std::vector<WedgeAtom> atoms);

    static WedgeAtom sphere(int n);
    static WedgeAtom moore(int n, arith::Int c);
    static WedgeAtom opaque(std::string tag, std::map<int, FGAbelianGroup> homology);

    void add(WedgeAtom atom, int copies = 1);
    const std::vector<WedgeAtom>& atoms() const noexcept { return atoms_; }
    /// Atoms sorted: spheres, Moore spaces, opaque atoms; each by dimension.
    WedgeExpr normalized() const;
    FGAbelianGroup reduced_homology(int degree) const;
    /// "P⁶(5)∨P⁴(5)∨S⁵∨S⁴", "*" when empty.
    std::string to_string() const;

    friend bool operator==(const WedgeExpr& a, const WedgeExpr& b);

private:
    std::vector<WedgeAtom> atoms_;
};

/// Splitting of Σ^t M for t = 2 (4-skeleton only), 3 or 4.
WedgeExpr suspension_splitting(const ManifoldSpec& M, int t);

}  // namespace gauge5::spaces
