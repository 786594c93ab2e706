#include "spectra/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

ThetaParams::ThetaParams(int a_, int b_, int c_) : a(a_), b(b_), c(c_) {
  if (a < 0 || c < 0 || a > b || b < 1)
    throw PreconditionError("theta params require 0 <= a <= b, b >= 1, c >= 0");
}

InftyParams::InftyParams(int k_, int l_) : k(k_), l(l_) {
  if (k < 2 || k > l)
    throw PreconditionError("infty params require 2 <= k <= l");
}

int family_order(const FamilyParams& p) {
  return std::visit([](const auto& q) { return q.order(); }, p);
}

std::string family_label(const FamilyParams& p) {
  std::ostringstream out;
  if (const auto* t = std::get_if<ThetaParams>(&p))
    out << "theta(" << t->a << ',' << t->b << ',' << t->c << ')';
  else {
    const auto& i = std::get<InftyParams>(p);
    out << "infty(" << i.k << ',' << i.l << ')';
  }
  return out.str();
}

Digraph build_cycle(int n) {
  if (n < 2) throw PreconditionError("cycle order must be >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(n);
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

namespace {

// Appends the path hub_from -> interior... -> hub_to using `len` interior
// vertices starting at index `next`, returning the next free index.
int append_path(std::vector<Arc>& arcs, int from, int to, int len, int next) {
  int prev = from;
  for (int i = 0; i < len; ++i) {
    arcs.push_back({prev, next});
    prev = next++;
  }
  arcs.push_back({prev, to});
  return next;
}

}  // namespace

Digraph build_theta(const ThetaParams& p) {
  std::vector<Arc> arcs;
  arcs.reserve(p.order() + 1);
  int next = 2;
  next = append_path(arcs, 0, 1, p.a, next);  // length a+1, hub 0 -> hub 1
  next = append_path(arcs, 0, 1, p.b, next);  // length b+1
  next = append_path(arcs, 1, 0, p.c, next);  // length c+1, back edge path
  return Digraph(p.order(), std::move(arcs));
}

Digraph build_infty(const InftyParams& p) {
  std::vector<Arc> arcs;
  arcs.reserve(p.order() + 1);
  int next = 1;
  next = append_path(arcs, 0, 0, p.k - 1, next);
  next = append_path(arcs, 0, 0, p.l - 1, next);
  return Digraph(p.order(), std::move(arcs));
}

Digraph build_theta_plus_arc(int n) {
  if (n < 4) throw PreconditionError("theta-plus-arc order must be >= 4");
  return build_theta(ThetaParams(0, 1, n - 3)).with_arc(2, 3);
}

namespace {

Polynomial trinomial(int n, int a, int b) {
  std::vector<Int> c(n + 1);
  c[n] = 1;
  c[a] -= 1;
  c[b] -= 1;
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial theta_charpoly(const ThetaParams& p) {
  return trinomial(p.order(), p.a, p.b);
}

Polynomial infty_charpoly(const InftyParams& p) {
  return trinomial(p.order(), p.k - 1, p.l - 1);
}

Polynomial cycle_charpoly(int n) {
  if (n < 2) throw PreconditionError("cycle order must be >= 2");
  std::vector<Int> c(n + 1);
  c[n] = 1;
  c[0] = -1;
  return Polynomial(std::move(c));
}

Polynomial theta_plus_arc_charpoly(int n) {
  if (n < 4) throw PreconditionError("theta-plus-arc order must be >= 4");
  std::vector<Int> c(n + 1);
  c[n] = 1;
  c[1] = -2;
  c[0] = -1;
  return Polynomial(std::move(c));
}

std::vector<FamilyParams> enumerate_bicyclic_params(int n) {
  if (n < 3) throw PreconditionError("bicyclic digraphs require order >= 3");
  std::vector<FamilyParams> out;
  for (int a = 0; a <= n - 2; ++a)
    for (int b = std::max(a, 1); a + b <= n - 2; ++b)
      out.emplace_back(ThetaParams(a, b, n - 2 - a - b));
  for (int k = 2; 2 * k <= n + 1; ++k) out.emplace_back(InftyParams(k, n + 1 - k));
  return out;
}

namespace {

// Walks the unique successor chain from `v` until reaching `stop`,
// returning the number of arcs traversed, or -1 if the walk leaves the
// expected shape (branching vertex or revisit).
int walk_to(const Digraph& d, int v, int stop) {
  int len = 0;
  int cur = v;
  std::uint64_t seen = 0;
  while (true) {
    const std::uint64_t outs = d.out_mask(cur);
    if (std::popcount(outs) != 1) return -1;
    const int nxt = std::countr_zero(outs);
    ++len;
    if (nxt == stop) return len;
    if ((seen >> nxt) & 1) return -1;
    seen |= std::uint64_t(1) << nxt;
    cur = nxt;
    if (len > d.order() + 1) return -1;
  }
}

}  // namespace

std::optional<FamilyParams> recognize_family(const Digraph& d) {
  const int n = d.order();
  if (d.arc_count() != n + 1 || !is_strongly_connected(d)) return std::nullopt;

  int out2 = -1, in2 = -1;
  for (int v = 0; v < n; ++v) {
    const int od = d.out_degree(v), id = d.in_degree(v);
    if (od > 2 || id > 2 || od == 0 || id == 0) return std::nullopt;
    if (od == 2) {
      if (out2 >= 0) return std::nullopt;
      out2 = v;
    }
    if (id == 2) {
      if (in2 >= 0) return std::nullopt;
      in2 = v;
    }
  }
  if (out2 < 0 || in2 < 0) return std::nullopt;

  if (out2 == in2) {
    // infty: two cycles through the single hub.
    const int hub = out2;
    std::vector<int> lens;
    bool ok = true;
    for_each_bit(d.out_mask(hub), [&](int first) {
      const int rest = walk_to(d, first, hub);
      if (rest < 0)
        ok = false;
      else
        lens.push_back(1 + rest);
    });
    if (!ok || lens.size() != 2) return std::nullopt;
    std::sort(lens.begin(), lens.end());
    if (lens[0] + lens[1] - 1 != n) return std::nullopt;
    return FamilyParams(InftyParams(lens[0], lens[1]));
  }

  // theta: two forward paths out2 -> in2, one return path.
  std::vector<int> fwd;
  bool ok = true;
  for_each_bit(d.out_mask(out2), [&](int first) {
    if (first == in2) {
      fwd.push_back(1);
      return;
    }
    const int rest = walk_to(d, first, in2);
    if (rest < 0)
      ok = false;
    else
      fwd.push_back(1 + rest);
  });
  if (!ok || fwd.size() != 2) return std::nullopt;
  const int back = walk_to(d, in2, out2);
  if (back < 0) return std::nullopt;
  std::sort(fwd.begin(), fwd.end());
  const int a = fwd[0] - 1, b = fwd[1] - 1, c = back - 1;
  if (a + b + c + 2 != n || b < 1) return std::nullopt;
  return FamilyParams(ThetaParams(a, b, c));
}

namespace {

std::vector<int> parse_int_list(std::string_view s, size_t expect) {
  std::vector<int> vals;
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t comma = std::min(s.find(',', pos), s.size());
    int v = 0;
    const auto res = std::from_chars(s.data() + pos, s.data() + comma, v);
    if (res.ec != std::errc() || res.ptr != s.data() + comma)
      throw ParseError("malformed number in family specifier");
    vals.push_back(v);
    if (comma == s.size()) break;
    pos = comma + 1;
  }
  if (vals.size() != expect) throw ParseError("wrong arity in family specifier");
  return vals;
}

}  // namespace

std::optional<DigraphSpec> parse_digraph_spec(std::string_view spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  try {
    if (kind == "theta") {
      const auto v = parse_int_list(rest, 3);
      return DigraphSpec(ThetaParams(v[0], v[1], v[2]));
    }
    if (kind == "infty") {
      const auto v = parse_int_list(rest, 2);
      return DigraphSpec(InftyParams(v[0], v[1]));
    }
    if (kind == "cycle") return DigraphSpec(CycleSpec{parse_int_list(rest, 1)[0]});
    if (kind == "dprime") return DigraphSpec(DPrimeSpec{parse_int_list(rest, 1)[0]});
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return std::nullopt;
}

Digraph build(const DigraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> Digraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ThetaParams>) return build_theta(s);
        else if constexpr (std::is_same_v<T, InftyParams>) return build_infty(s);
        else if constexpr (std::is_same_v<T, CycleSpec>) return build_cycle(s.n);
        else return build_theta_plus_arc(s.n);
      },
      spec);
}

Polynomial closed_form_charpoly(const DigraphSpec& spec) {
  return std::visit(
      [](const auto& s) -> Polynomial {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ThetaParams>) return theta_charpoly(s);
        else if constexpr (std::is_same_v<T, InftyParams>) return infty_charpoly(s);
        else if constexpr (std::is_same_v<T, CycleSpec>) return cycle_charpoly(s.n);
        else return theta_plus_arc_charpoly(s.n);
      },
      spec);
}

std::string spec_label(const DigraphSpec& spec) {
  std::ostringstream out;
  if (const auto* t = std::get_if<ThetaParams>(&spec))
    return family_label(FamilyParams(*t));
  if (const auto* i = std::get_if<InftyParams>(&spec))
    return family_label(FamilyParams(*i));
  if (const auto* c = std::get_if<CycleSpec>(&spec)) {
    out << "cycle(" << c->n << ')';
    return out.str();
  }
  out << "dprime(" << std::get<DPrimeSpec>(spec).n << ')';
  return out.str();
}

}  // namespace spectra
