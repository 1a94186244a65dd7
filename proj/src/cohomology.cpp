#include "locoh/cohomology.hpp"

#include <mutex>
#include <tuple>

namespace locoh {

namespace {

struct DimKey {
  int n;
  bool void_complex;
  std::vector<std::uint64_t> facets;
  int q;
  int field_kind;
  std::uint32_t p;

  auto operator<=>(const DimKey&) const = default;
};

DimKey make_key(const SimplicialComplex& complex, int q, const FieldSpec& field) {
  DimKey key;
  key.n = complex.universe_size();
  key.void_complex = complex.is_void();
  key.facets.reserve(complex.facets().size());
  for (const VarSet& f : complex.facets()) key.facets.push_back(f.bits());
  key.q = q;
  key.field_kind = static_cast<int>(field.kind);
  key.p = field.p;
  return key;
}

std::mutex g_dim_mutex;
std::map<DimKey, long>& dim_cache() {
  static std::map<DimKey, long> cache;
  return cache;
}

}  // namespace

long cohomology_dim(const SimplicialComplex& complex, int q, const FieldSpec& field) {
  if (complex.is_void() || q < -1 || q > complex.max_face_card()) return 0;
  const DimKey key = make_key(complex, q, field);
  {
    std::lock_guard<std::mutex> lock(g_dim_mutex);
    const auto it = dim_cache().find(key);
    if (it != dim_cache().end()) return it->second;
  }
  const long dim = with_field(field, [&](auto f) {
    return static_cast<long>(reduced_cohomology_basis(f, complex, q).dim());
  });
  std::lock_guard<std::mutex> lock(g_dim_mutex);
  dim_cache().emplace(key, dim);
  return dim;
}

RenderedCohomology reduced_cohomology(const SimplicialComplex& complex, int q,
                                      const FieldSpec& field) {
  return with_field(field, [&](auto f) {
    using F = decltype(f);
    const CohomologyBasis<F> basis = reduced_cohomology_basis(f, complex, q);
    RenderedCohomology out;
    out.q = q;
    out.dim = static_cast<long>(basis.dim());
    out.faces = basis.faces;
    for (const auto& rep : basis.reps) {
      std::vector<std::string> row;
      row.reserve(rep.size());
      for (const auto& e : rep) row.push_back(F::str(e));
      out.reps.push_back(std::move(row));
    }
    return out;
  });
}

ExactMatrix restriction_on_cohomology(const SimplicialComplex& big,
                                      const SimplicialComplex& small, int q,
                                      const FieldSpec& field) {
  if (big.universe_size() != small.universe_size())
    throw std::invalid_argument("restriction_on_cohomology: universe mismatch");
  if (!small.subcomplex_of(big))
    throw std::invalid_argument("restriction_on_cohomology: not a subcomplex");
  return with_field(field, [&](auto f) {
    using F = decltype(f);
    const CohomologyBasis<F> src = reduced_cohomology_basis(f, big, q);
    const CohomologyBasis<F> dst = reduced_cohomology_basis(f, small, q);
    const Matrix<F> m = restriction_matrix(f, src, dst);
    ExactMatrix out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.field = field;
    out.rank = m.rank();
    out.entries.reserve(out.rows * out.cols);
    for (std::size_t r = 0; r < out.rows; ++r)
      for (std::size_t c = 0; c < out.cols; ++c) out.entries.push_back(F::str(m.at(r, c)));
    return out;
  });
}

namespace {
FieldSpec validate_prime(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("FieldSpec: modulus must be a prime >= 2");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("FieldSpec: modulus is not prime");
  FieldSpec s;
  s.kind = FieldSpec::Kind::PrimeField;
  s.p = p;
  return s;
}
}  // namespace

FieldSpec FieldSpec::prime_field(std::uint32_t p) { return validate_prime(p); }

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t == "rational" || t == "rationals" || t == "QQ" || t == "Q") return rationals();
  if (t.rfind("gf", 0) == 0 || t.rfind("GF", 0) == 0) {
    const std::string num = t.substr(2);
    if (num.empty()) return prime_field(32003);
    std::size_t pos = 0;
    const unsigned long p = std::stoul(num, &pos);
    if (pos != num.size()) throw std::invalid_argument("FieldSpec: bad modulus '" + num + "'");
    return prime_field(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("FieldSpec: expected 'rational' or 'gf <p>', got '" + text + "'");
}

std::string FieldSpec::name() const {
  if (kind == Kind::Rationals) return "rational";
  return "gf " + std::to_string(p);
}

}  // namespace locoh
