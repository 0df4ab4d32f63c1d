#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gauge5/arith.hpp"

namespace gauge5::lie {

/// Values for the free variables of a catalog expression.
struct Bindings {
    std::optional<arith::Int> n;
    std::optional<arith::Int> p;
    std::optional<arith::Int> c;
};

/// Integer expression over n, p, c. Operators: + - * / % ^, comparisons,
/// && || !, parentheses. Functions: legendre(x) = nu_p(x!), nu(x) = nu_p(x),
/// gcd(a, b). Booleans are 0/1.
class CatalogExpr {
public:
    CatalogExpr() = default;
    static CatalogExpr parse(std::string_view text);

    arith::Int eval(const Bindings& b) const;
    bool uses(char var) const;
    const std::string& source() const noexcept { return source_; }

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string source_;
};

enum class RowKind { Ord, Range, R, Torsion, Trivial };

struct CatalogRow {
    RowKind kind = RowKind::Ord;
    std::string family;
    int lo = 0;
    int hi = 0;  // -1: unbounded
    bool integral = false;
    CatalogExpr condition;
    CatalogExpr value;
    int line = 0;
};

/// Versioned plain-text table of group data. One row per line:
///   kind | family | params | condition | value
/// kind is ord, range, r, torsion or trivial; params is "a..b", "a..", "a" or
/// "-"; condition is the word "integral" or an expression. '#' starts a comment.
class Catalog {
public:
    static Catalog parse(std::string_view text, const std::string& origin = "<memory>");
    static Catalog load(const std::string& path);
    /// The catalog compiled into the library from data/catalog.txt.
    static const Catalog& builtin();

    int version() const noexcept { return version_; }
    const std::vector<CatalogRow>& rows() const noexcept { return rows_; }

    /// First row (file order) of the given kind and family that covers n and
    /// whose condition holds. Without a prime only integral rows qualify; with
    /// a prime, integral rows always qualify.
    const CatalogRow* find(RowKind kind, std::string_view family, int n, std::optional<arith::Int> p,
                           std::optional<arith::Int> c = std::nullopt) const;

private:
    int version_ = 0;
    std::vector<CatalogRow> rows_;
};

}  // namespace gauge5::lie
