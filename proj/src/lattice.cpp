#include "mtkit/lattice.hpp"

#include <algorithm>

namespace mtkit {

void PkMatrix::add_row(std::vector<std::uint64_t> r) {
  require(r.size() == cols, errc::shape_mismatch, "row length mismatch");
  for (auto& x : r) x %= ctx.q;
  rows.push_back(std::move(r));
}

unsigned HowellForm::log_cardinality(unsigned k) const {
  unsigned e = 0;
  for (const auto& p : pivots) e += k - p.val;
  return e;
}

namespace {

struct WorkRow {
  std::vector<std::uint64_t> row;
  std::vector<std::uint64_t> t;
};

void axpy(std::vector<std::uint64_t>& dst, std::uint64_t c,
          const std::vector<std::uint64_t>& src, const PkContext& ctx, bool subtract) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint64_t term = ctx.mul(c, src[i]);
    dst[i] = subtract ? ctx.sub(dst[i], term) : ctx.add(dst[i], term);
  }
}

void scale(std::vector<std::uint64_t>& v, std::uint64_t c, const PkContext& ctx) {
  for (auto& x : v) x = ctx.mul(x, c);
}

bool all_zero(const std::vector<std::uint64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

}  // namespace

HowellForm howell(const PkMatrix& m, bool want_transform) {
  const PkContext& ctx = m.ctx;
  const unsigned k = ctx.k;
  std::vector<WorkRow> work;
  work.reserve(m.rows.size());
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    WorkRow w{m.rows[i], {}};
    if (want_transform) {
      w.t.assign(m.rows.size(), 0);
      w.t[i] = 1 % ctx.q;
    }
    work.push_back(std::move(w));
  }

  HowellForm out;
  out.basis = PkMatrix(ctx, m.cols);
  std::vector<WorkRow> done;

  for (std::size_t col = 0; col < m.cols; ++col) {
    // All live work rows are zero in columns < col.
    std::size_t best = work.size();
    unsigned best_val = k;
    for (std::size_t i = 0; i < work.size(); ++i) {
      unsigned v = ctx.val(work[i].row[col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best == work.size()) continue;

    WorkRow piv = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));

    // Normalize the pivot entry to p^v.
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < best_val; ++i) pv *= ctx.p;
    std::uint64_t unit = piv.row[col] / pv;  // exact; prime to p by minimality of v
    std::uint64_t unit_inv = ctx.inv(unit);
    scale(piv.row, unit_inv, ctx);
    if (want_transform) scale(piv.t, unit_inv, ctx);

    for (auto& w : work) {
      std::uint64_t a = w.row[col];
      if (a == 0) continue;
      std::uint64_t c = a / pv;  // exact since val(a) >= v
      axpy(w.row, c, piv.row, ctx, true);
      if (want_transform) axpy(w.t, c, piv.t, ctx, true);
    }

    if (best_val > 0) {
      // p^(k-v) * pivot has support strictly to the right; keeping it makes
      // the form Howell (span of trailing rows covers trailing sub-lattices).
      WorkRow extra;
      extra.row = piv.row;
      std::uint64_t f = ctx.q / pv;
      scale(extra.row, f % ctx.q, ctx);
      if (want_transform) {
        extra.t = piv.t;
        scale(extra.t, f % ctx.q, ctx);
      }
      // A zero extra row still matters when tracking transforms: its
      // transform is a kernel generator.
      if (want_transform || !all_zero(extra.row)) work.push_back(std::move(extra));
    }

    out.pivots.push_back(HowellPivot{col, best_val});
    done.push_back(std::move(piv));
  }

  // Reduce entries above each pivot modulo the pivot power.
  for (std::size_t j = 0; j < done.size(); ++j) {
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < out.pivots[j].val; ++i) pv *= ctx.p;
    for (std::size_t i = 0; i < j; ++i) {
      std::uint64_t a = done[i].row[out.pivots[j].col];
      std::uint64_t c = a / pv;
      if (c == 0) continue;
      axpy(done[i].row, c, done[j].row, ctx, true);
      if (want_transform) axpy(done[i].t, c, done[j].t, ctx, true);
    }
  }

  for (auto& d : done) {
    out.basis.rows.push_back(std::move(d.row));
    if (want_transform) out.transform.push_back(std::move(d.t));
  }
  if (want_transform) {
    for (auto& w : work) {
      // Leftover rows reduced to zero; their transforms generate the kernel.
      require(all_zero(w.row), errc::internal, "nonzero residual row after Howell pass");
      out.kernel.push_back(std::move(w.t));
    }
  }
  return out;
}

PkMatrix kernel_lattice(const PkMatrix& m) {
  HowellForm h = howell(m, true);
  PkMatrix ker(m.ctx, m.rows.size());
  for (auto& t : h.kernel) ker.rows.push_back(t);
  HowellForm hk = howell(ker, false);
  // |ker| * |im| = q^rows certifies completeness of the kernel generators.
  unsigned total = m.ctx.k * static_cast<unsigned>(m.rows.size());
  require(hk.log_cardinality(m.ctx.k) + h.log_cardinality(m.ctx.k) == total, errc::internal,
          "kernel cardinality check failed");
  return hk.basis;
}

bool span_contains(const HowellForm& h, const std::vector<std::uint64_t>& v,
                   std::vector<std::uint64_t>* combo) {
  const PkContext& ctx = h.basis.ctx;
  require(v.size() == h.basis.cols, errc::shape_mismatch, "vector length mismatch");
  std::vector<std::uint64_t> r = v;
  if (combo) combo->assign(h.transform.empty() ? 0 : h.transform[0].size(), 0);
  for (std::size_t j = 0; j < h.pivots.size(); ++j) {
    std::uint64_t a = r[h.pivots[j].col];
    if (a == 0) continue;
    std::uint64_t pv = 1;
    for (unsigned i = 0; i < h.pivots[j].val; ++i) pv *= ctx.p;
    if (a % pv != 0) return false;
    std::uint64_t c = a / pv;
    axpy(r, c, h.basis.rows[j], ctx, true);
    if (combo && !h.transform.empty()) axpy(*combo, c, h.transform[j], ctx, false);
  }
  return all_zero(r);
}

std::optional<std::vector<std::uint64_t>> solve_span(const PkMatrix& m,
                                                     const std::vector<std::uint64_t>& b) {
  HowellForm h = howell(m, true);
  std::vector<std::uint64_t> combo;
  if (!span_contains(h, b, &combo)) return std::nullopt;
  return combo;
}

}  // namespace mtkit
