#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "spectra/digraph.hpp"
#include "spectra/polynomial.hpp"

namespace spectra {

/// theta(a, b, c): two hub vertices joined by internally disjoint directed
/// paths of lengths a+1 and b+1 in one direction and c+1 in the other.
/// Order a+b+c+2, arc count order+1. b >= 1 rules out the degenerate
/// double arc between the hubs.
struct ThetaParams {
  int a = 0, b = 1, c = 0;
  ThetaParams(int a_, int b_, int c_);
  int order() const { return a + b + c + 2; }
  auto operator<=>(const ThetaParams&) const = default;
};

/// infty(k, l): two directed cycles of lengths k and l sharing exactly one
/// vertex. Order k+l-1, arc count order+1. k >= 2 keeps the digraph
/// loop-free.
struct InftyParams {
  int k = 2, l = 2;
  InftyParams(int k_, int l_);
  int order() const { return k + l - 1; }
  auto operator<=>(const InftyParams&) const = default;
};

using FamilyParams = std::variant<ThetaParams, InftyParams>;

int family_order(const FamilyParams& p);
std::string family_label(const FamilyParams& p);  // "theta(0,1,1)", "infty(2,3)"

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
Digraph build_cycle(int n);

/// Vertex numbering: hub 0 (tail of both forward paths), hub 1, then the
/// interior vertices of the a-, b-, c-paths in that order.
Digraph build_theta(const ThetaParams& p);

/// Vertex numbering: hub 0, then the k-cycle interior, then the l-cycle
/// interior.
Digraph build_infty(const InftyParams& p);

/// theta(0, 1, n-3) plus the chord from the b-path interior vertex to the
/// first interior vertex of the c-path (vertex 2 -> vertex 3); n+2 arcs.
/// Its characteristic polynomial is x^n - 2x - 1.
Digraph build_theta_plus_arc(int n);

Polynomial theta_charpoly(const ThetaParams& p);  // x^n - x^a - x^b
Polynomial infty_charpoly(const InftyParams& p);  // x^n - x^(k-1) - x^(l-1)
Polynomial cycle_charpoly(int n);                 // x^n - 1
Polynomial theta_plus_arc_charpoly(int n);        // x^n - 2x - 1

/// All distinct parameter choices of order n: theta triples with
/// a+b+c = n-2 (0 <= a <= b, b >= 1) and infty pairs with k+l = n+1
/// (2 <= k <= l). These are exactly the strongly connected bicyclic
/// digraphs of order n, up to isomorphism.
std::vector<FamilyParams> enumerate_bicyclic_params(int n);

/// Structural recognition of an arbitrarily labeled bicyclic digraph.
/// Returns nullopt unless d is strongly connected with order()+1 arcs and
/// the theta/infty hub-and-path shape.
std::optional<FamilyParams> recognize_family(const Digraph& d);

/// Compact digraph specifiers accepted by the CLI anywhere a file is:
/// "theta:a,b,c", "infty:k,l", "cycle:n", "dprime:n".
struct CycleSpec {
  int n;
};
struct DPrimeSpec {
  int n;
};
using DigraphSpec = std::variant<ThetaParams, InftyParams, CycleSpec, DPrimeSpec>;

/// Nullopt when the string does not look like a family specifier at all;
/// throws ParseError when it does but carries malformed or invalid numbers.
std::optional<DigraphSpec> parse_digraph_spec(std::string_view spec);
Digraph build(const DigraphSpec& spec);
Polynomial closed_form_charpoly(const DigraphSpec& spec);
std::string spec_label(const DigraphSpec& spec);

}  // namespace spectra
