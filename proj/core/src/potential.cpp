#include "bhk/potential.hpp"

#include "bhk/error.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

namespace bhk {

std::string to_string(AtomicKind kind) {
  switch (kind) {
    case AtomicKind::fermat: return "fermat";
    case AtomicKind::loop: return "loop";
    case AtomicKind::chain: return "chain";
  }
  return "unknown";
}

Integer AtomicPiece::aut_order() const {
  Integer prod = 1;
  for (const auto& a : exponents) prod *= a;
  if (kind == AtomicKind::loop) {
    // a_1 ... a_m + (-1)^{m+1}
    prod += (exponents.size() % 2 == 1) ? 1 : -1;
  }
  return prod < 0 ? Integer(-prod) : prod;
}

namespace {

[[noreturn]] void condition(int which, const std::string& msg) {
  std::ostringstream os;
  os << "condition (" << which << "): " << msg;
  throw Error(ErrorKind::condition_violation, os.str());
}

// Row i is read as a "head" variable raised to some power, optionally times
// a "tail" variable to the first power.
struct RowShape {
  std::size_t head;
  std::optional<std::size_t> tail;
};

struct RowOptions {
  std::vector<RowShape> shapes;
};

std::optional<std::vector<AtomicPiece>> assemble(const IntMatrix& a,
                                                 const std::vector<RowShape>& pick) {
  const std::size_t n = a.rows();
  std::vector<std::ptrdiff_t> row_of_head(n, -1);
  std::vector<std::ptrdiff_t> pred(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = pick[i];
    if (row_of_head[s.head] >= 0) return std::nullopt;
    row_of_head[s.head] = static_cast<std::ptrdiff_t>(i);
    if (s.tail) {
      if (pred[*s.tail] >= 0) return std::nullopt;
      pred[*s.tail] = static_cast<std::ptrdiff_t>(s.head);
    }
  }

  std::vector<bool> seen(n, false);
  std::vector<AtomicPiece> pieces;
  auto walk = [&](std::size_t start, bool cyclic) -> bool {
    AtomicPiece piece;
    std::size_t v = start;
    while (true) {
      seen[v] = true;
      const auto& s = pick[static_cast<std::size_t>(row_of_head[v])];
      piece.variables.push_back(v);
      piece.exponents.push_back(a(static_cast<std::size_t>(row_of_head[v]), v));
      if (!s.tail) break;
      v = *s.tail;
      if (v == start) break;
      if (seen[v]) return false;
    }
    const bool closed = pick[static_cast<std::size_t>(row_of_head[piece.variables.back()])].tail.has_value();
    if (closed != cyclic) return false;
    if (cyclic) {
      piece.kind = AtomicKind::loop;
    } else {
      piece.kind = piece.variables.size() == 1 ? AtomicKind::fermat : AtomicKind::chain;
      if (piece.exponents.back() < 2) return false;
    }
    pieces.push_back(std::move(piece));
    return true;
  };

  for (std::size_t v = 0; v < n; ++v)
    if (pred[v] < 0 && !walk(v, false)) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v] && !walk(v, true)) return std::nullopt;

  std::sort(pieces.begin(), pieces.end(), [](const auto& x, const auto& y) {
    return *std::min_element(x.variables.begin(), x.variables.end()) <
           *std::min_element(y.variables.begin(), y.variables.end());
  });
  return pieces;
}

}  // namespace

std::vector<AtomicPiece> decompose_atomic(const IntMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorKind::dimension, "exponent matrix must be square");
  const std::size_t n = a.rows();
  std::vector<RowOptions> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) support.push_back(j);
    if (support.empty()) condition(3, "monomial " + std::to_string(i + 1) + " is constant");
    if (support.size() > 2)
      condition(3, "monomial " + std::to_string(i + 1) +
                       " involves more than two variables");
    if (support.size() == 1) {
      options[i].shapes.push_back({support[0], std::nullopt});
      continue;
    }
    const auto j = support[0], k = support[1];
    if (a(i, k) == 1) options[i].shapes.push_back({j, k});
    if (a(i, j) == 1) options[i].shapes.push_back({k, j});
    if (options[i].shapes.empty())
      condition(3, "monomial " + std::to_string(i + 1) +
                       " is not of the form x^a y");
  }

  // Only x*y monomials are ambiguous; try each orientation.
  std::vector<std::size_t> ambiguous;
  for (std::size_t i = 0; i < n; ++i)
    if (options[i].shapes.size() > 1) ambiguous.push_back(i);
  if (ambiguous.size() > 20)
    condition(3, "too many bilinear monomials to orient");
  std::vector<RowShape> pick(n, RowShape{0, std::nullopt});
  for (std::size_t i = 0; i < n; ++i) pick[i] = options[i].shapes.front();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ambiguous.size()); ++mask) {
    for (std::size_t b = 0; b < ambiguous.size(); ++b)
      pick[ambiguous[b]] = options[ambiguous[b]].shapes[(mask >> b) & 1U];
    if (auto pieces = assemble(a, pick)) return *pieces;
  }
  condition(3, "not a sum of Fermat, loop and chain potentials");
}

std::vector<AtomicPiece> decompose_atomic(const InvertiblePotential& p) {
  return decompose_atomic(p.exponents());
}

InvertiblePotential build_potential(const IntMatrix& a) {
  if (!a.is_square() || a.rows() == 0)
    throw Error(ErrorKind::dimension, "exponent matrix must be square and non-empty");
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) < 0)
        throw Error(ErrorKind::domain, "exponent matrix has a negative entry");

  if (determinant(a) == 0) condition(1, "exponent matrix is singular");

  InvertiblePotential p;
  p.a_ = a;
  auto inv = bhk::scaled_inverse(a);
  p.d_ = std::move(inv.d);
  p.b_ = std::move(inv.b);
  p.q_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p.q_[i] += p.b_(i, j);
  for (std::size_t i = 0; i < n; ++i)
    if (p.q_[i] <= 0)
      condition(2, "weight q_" + std::to_string(i + 1) + " is not positive");

  p.pieces_ = decompose_atomic(a);

  Integer g = 0;
  for (const auto& q : p.q_) g = gcd(g, q);
  p.reduced_q_ = p.q_;
  for (auto& q : p.reduced_q_) q /= g;
  p.reduced_d_ = p.d_ / g;

  Integer sum = 0;
  for (const auto& q : p.q_) sum += q;
  p.calabi_yau_ = (sum == p.d_);
  p.gorenstein_ = std::all_of(p.q_.begin(), p.q_.end(),
                              [&](const Integer& q) { return p.d_ % q == 0; });
  return p;
}

InvertiblePotential transpose_potential(const InvertiblePotential& p) {
  return build_potential(p.exponents().transpose());
}

InvertiblePotential fermat_potential(const Integer& degree, std::size_t nvars) {
  if (degree < 2 || nvars < 3)
    throw Error(ErrorKind::domain, "Fermat potential needs degree >= 2 and >= 3 variables");
  return build_potential(IntMatrix::identity(nvars).scaled(degree));
}

std::string InvertiblePotential::to_string(char var) const {
  std::ostringstream os;
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    if (i) os << " + ";
    bool first = true;
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (a_(i, j) == 0) continue;
      if (!first) os << '*';
      first = false;
      os << var << (j + 1);
      if (a_(i, j) != 1) os << '^' << a_(i, j);
    }
  }
  return os.str();
}

std::complex<double> integer_power(std::complex<double> z, long long e) {
  if (e < 0) return 1.0 / integer_power(z, -e);
  std::complex<double> r = 1.0;
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

std::complex<double> evaluate_numeric(const InvertiblePotential& p,
                                      std::span<const std::complex<double>> point) {
  const auto& a = p.exponents();
  if (point.size() != a.cols())
    throw Error(ErrorKind::dimension, "point has the wrong number of coordinates");
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::complex<double> term = 1.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) term *= integer_power(point[j], a(i, j).convert_to<long long>());
    sum += term;
  }
  return sum;
}

}  // namespace bhk
