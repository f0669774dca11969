#include "gf/vey.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gf {

int VeyTuple::degree() const {
  int s = std::accumulate(ps.begin(), ps.end(), 0) +
          std::accumulate(rs.begin(), rs.end(), 0);
  return 2 * s - static_cast<int>(ps.size());
}

std::string VeyTuple::str() const {
  std::ostringstream os;
  const char* tg = relative ? "L" : "G";
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << tg << ps[i];
  for (int r : rs) os << " P" << r;
  return os.str();
}

namespace {

void gen_ps(int n, bool odd_only, std::vector<std::vector<int>>& out) {
  // nonempty strictly increasing subsets of 1..n
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int p = start; p <= n; ++p) {
      if (odd_only && p % 2 == 0) continue;
      cur.push_back(p);
      self(self, p + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}

void gen_rs(int n, std::vector<std::vector<int>>& out) {
  // nonempty non-decreasing sequences over 1..n with sum <= n
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start, int sum) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int r = start; r <= n; ++r) {
      if (sum + r > n) break;
      cur.push_back(r);
      self(self, r, sum + r);
      cur.pop_back();
    }
  };
  rec(rec, 1, 0);
}

}  // namespace

std::vector<VeyTuple> enumerate_vey(int n, int m, VeyVariant variant,
                                    IneqReading ineq) {
  if (m < 1) throw std::invalid_argument("enumerate_vey: m >= 1");
  std::vector<std::vector<int>> pss, rss;
  gen_ps(n, variant == VeyVariant::relative, pss);
  gen_rs(n, rss);

  std::vector<VeyTuple> out;
  for (const auto& ps : pss) {
    for (const auto& rs : rss) {
      int p1 = ps.front(), r1 = rs.front();
      if (ineq == IneqReading::le ? (p1 > r1) : (p1 < r1)) continue;
      int sr = std::accumulate(rs.begin(), rs.end(), 0);
      if (p1 + sr <= n) continue;
      VeyTuple t{ps, rs, variant == VeyVariant::relative};
      if (t.degree() == m) out.push_back(std::move(t));
    }
  }
  return out;  // generation order is already deterministic
}

DimensionTable dimension_table(int n, VeyVariant variant, IneqReading ineq) {
  if (n > 6) throw std::invalid_argument("dimension_table: n too large (combinatorial guard)");
  DimensionTable t;
  t.n = n;
  t.variant = variant;
  t.ineq = ineq;
  t.bound_lo = 2 * n + 1;
  t.bound_hi = variant == VeyVariant::general
                   ? n * (n + 2)
                   : (n % 2 == 0 ? n * (n + 3) / 2 : n * (n + 5) / 2);
  t.bounds_respected = true;
  for (int m = 1; m <= t.bound_hi + 2 * n + 2; ++m) {
    auto tuples = enumerate_vey(n, m, variant, ineq);
    if (tuples.empty()) continue;
    t.counts[m] = static_cast<int>(tuples.size());
    if (m < t.bound_lo || m > t.bound_hi) t.bounds_respected = false;
  }
  return t;
}

std::string render(const DimensionTable& t, bool with_tuples) {
  std::ostringstream os;
  os << (t.variant == VeyVariant::general ? "H*(W_" + std::to_string(t.n) + ") basis"
                                          : "H*(W_" + std::to_string(t.n) +
                                                ", O(" + std::to_string(t.n) +
                                                ")) basis (dimensions > " +
                                                std::to_string(2 * t.n) + ")")
     << ", reading p1 " << (t.ineq == IneqReading::le ? "<=" : ">=") << " r1\n";
  if (t.counts.empty()) os << "  (empty)\n";
  for (const auto& [m, k] : t.counts) {
    os << "  m=" << m << ": " << k;
    if (with_tuples) {
      os << "   [";
      auto tuples = enumerate_vey(t.n, m, t.variant, t.ineq);
      for (std::size_t i = 0; i < tuples.size(); ++i)
        os << (i ? ", " : "") << tuples[i].str();
      os << "]";
    }
    os << "\n";
  }
  os << "  vanishing range " << t.bound_lo << " <= m <= " << t.bound_hi << ": "
     << (t.bounds_respected ? "respected" : "VIOLATED") << "\n";
  return os.str();
}

}  // namespace gf
