#include "levydual/models.hpp"

#include "levydual/errors.hpp"

namespace levydual {

Complex joint_cumulant(const Model& m, const CVector& w) { return m.cumulant(w); }

RowMatrix sample_terminal(const Model& m, double T, std::int64_t n, std::uint64_t seed,
                          int workers) {
  if (!(T > 0.0)) throw InvalidArgument("sample_terminal: maturity must be positive");
  if (n < 1) throw InvalidArgument("sample_terminal: n must be at least 1");
  if (!m.supports_sampling()) throw UnsupportedModel(m.name() + " has no terminal sampler");
  RowMatrix out(n, m.dim());
  const Eigen::RowVectorXd spot = m.log_spot().transpose();
  for_each_block(n, workers, [&](std::int64_t block, std::int64_t begin, std::int64_t count) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(block));
    auto rows = out.middleRows(begin, count);
    m.sample_increments(T, rng, rows, false);
    rows.rowwise() += spot;
  });
  return out;
}

}  // namespace levydual
