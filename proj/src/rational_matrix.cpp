#include "gk/rational_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>

#include "gk/errors.hpp"
#include "gk/threads.hpp"

namespace gk {

void RationalMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw Error("matrix index out of range");
  if (v == 0) {
    entries.erase({r, c});
    return;
  }
  Rational q = v;
  q.canonicalize();
  entries[{r, c}] = q;
}

Rational RationalMatrix::at(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Rational(0) : it->second;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols, rows);
  for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

namespace {

// Integer rows after clearing denominators; row scaling leaves rank intact.
std::vector<std::map<int, Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::map<int, Integer>> rows(m.rows);
  std::vector<Integer> lcm(m.rows, 1);
  for (const auto& [rc, v] : m.entries) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), lcm[rc.first].get_mpz_t(), v.get_den().get_mpz_t());
    lcm[rc.first] = l;
  }
  for (const auto& [rc, v] : m.entries)
    rows[rc.first][rc.second] = v.get_num() * (lcm[rc.first] / v.get_den());
  return rows;
}

}  // namespace

int rank_exact(const RationalMatrix& m) {
  std::vector<std::map<int, Integer>> rows = integer_rows(m);
  std::vector<int> active;
  for (int r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) active.push_back(r);
  std::vector<char> col_used(m.cols, 0);
  std::vector<int> col_count(m.cols, 0);
  for (int r : active)
    for (const auto& [c, v] : rows[r]) ++col_count[c];

  Integer prev = 1;
  int rank = 0;
  while (!active.empty()) {
    // Markowitz: minimize (nnz(row)-1)*(nnz(col)-1).
    int pr = -1, pc = -1;
    long long best = -1;
    for (int r : active)
      for (const auto& [c, v] : rows[r]) {
        long long score = static_cast<long long>(rows[r].size() - 1) * (col_count[c] - 1);
        if (best < 0 || score < best) {
          best = score;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;

    Integer pivot = rows[pr][pc];
    std::vector<int> next_active;
    for (int r : active) {
      if (r == pr) continue;
      std::map<int, Integer> updated;
      auto it = rows[r].find(pc);
      if (it == rows[r].end()) {
        // One-step Bareiss still rescales untouched rows: pivot*row/prev.
        for (const auto& [c, v] : rows[r]) {
          Integer t = pivot * v;
          Integer q;
          mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          updated[c] = std::move(q);
        }
      } else {
        Integer factor = it->second;
        for (const auto& [c, v] : rows[r])
          if (c != pc) updated[c] = pivot * v;
        for (const auto& [c, v] : rows[pr])
          if (c != pc) {
            auto [pos, fresh] = updated.emplace(c, 0);
            pos->second -= factor * v;
          }
        for (auto uit = updated.begin(); uit != updated.end();) {
          if (uit->second == 0) {
            uit = updated.erase(uit);
            continue;
          }
          Integer q;
          mpz_divexact(q.get_mpz_t(), uit->second.get_mpz_t(), prev.get_mpz_t());
          uit->second = std::move(q);
          ++uit;
        }
      }
      for (const auto& [c, v] : rows[r]) --col_count[c];
      rows[r] = std::move(updated);
      for (const auto& [c, v] : rows[r]) ++col_count[c];
      if (!rows[r].empty()) next_active.push_back(r);
    }
    for (const auto& [c, v] : rows[pr]) --col_count[c];
    rows[pr].clear();
    active = std::move(next_active);
    prev = pivot;
    ++rank;
  }
  return rank;
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

int rank_mod_p(const RationalMatrix& m, uint64_t p) {
  std::vector<std::vector<std::pair<int, uint64_t>>> rows(m.rows);
  for (const auto& [rc, v] : m.entries) {
    uint64_t num = mpz_fdiv_ui(v.get_num().get_mpz_t(), p);
    uint64_t den = mpz_fdiv_ui(v.get_den().get_mpz_t(), p);
    uint64_t e = mulmod(num, powmod(den, p - 2, p), p);
    if (e) rows[rc.first].emplace_back(rc.second, e);
  }
  int rank = 0;
  std::vector<char> done(m.rows, 0);
  while (true) {
    int pr = -1;
    for (int r = 0; r < m.rows; ++r)
      if (!done[r] && !rows[r].empty() &&
          (pr < 0 || rows[r].size() < rows[pr].size()))
        pr = r;
    if (pr < 0) break;
    done[pr] = 1;
    ++rank;
    int pc = rows[pr].front().first;
    uint64_t inv = powmod(rows[pr].front().second, p - 2, p);
    for (int r = 0; r < m.rows; ++r) {
      if (done[r] || rows[r].empty()) continue;
      auto it = std::lower_bound(rows[r].begin(), rows[r].end(), pc,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == rows[r].end() || it->first != pc) continue;
      uint64_t factor = mulmod(it->second, inv, p);
      std::vector<std::pair<int, uint64_t>> merged;
      merged.reserve(rows[r].size() + rows[pr].size());
      auto a = rows[r].begin();
      auto b = rows[pr].begin();
      while (a != rows[r].end() || b != rows[pr].end()) {
        if (b == rows[pr].end() || (a != rows[r].end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == rows[r].end() || b->first < a->first) {
          uint64_t val = p - mulmod(factor, b->second, p);
          if (val != p) merged.emplace_back(b->first, val);
          ++b;
        } else {
          uint64_t val = (a->second + p - mulmod(factor, b->second, p)) % p;
          if (val) merged.emplace_back(a->first, val);
          ++a;
          ++b;
        }
      }
      rows[r] = std::move(merged);
    }
    rows[pr].clear();
  }
  return rank;
}

}  // namespace

int rank_modular(const RationalMatrix& m, int prime_count, bool verify) {
  if (prime_count < 1) throw Error("prime_count must be at least 1");
  std::mt19937_64 rng(std::random_device{}());
  std::uniform_int_distribution<uint64_t> dist(1u << 30, (1ull << 31) - 1);

  std::vector<uint64_t> primes;
  int attempts = 0;
  while (static_cast<int>(primes.size()) < prime_count) {
    if (++attempts > 20000 + 1000 * prime_count)
      throw NoValidPrime("could not find primes avoiding all entry denominators");
    uint64_t p = dist(rng) | 1;
    if (!is_prime(p)) continue;
    bool ok = true;
    for (const auto& [rc, v] : m.entries)
      if (mpz_fdiv_ui(v.get_den().get_mpz_t(), p) == 0) {
        ok = false;
        break;
      }
    if (ok) primes.push_back(p);
  }

  std::vector<int> ranks(primes.size(), 0);
  parallel_for(static_cast<int>(primes.size()),
               [&](int i) { ranks[i] = rank_mod_p(m, primes[i]); });
  int best = *std::max_element(ranks.begin(), ranks.end());
  if (verify) return rank_exact(m);
  return best;
}

RowReduced row_reduce(const RationalMatrix& m) {
  std::vector<std::map<int, Rational>> rows(m.rows);
  for (const auto& [rc, v] : m.entries) rows[rc.first][rc.second] = v;

  std::vector<std::pair<int, std::map<int, Rational>>> done;  // (pivot col, row)
  std::vector<int> active;
  for (int r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) active.push_back(r);

  for (int c = 0; c < m.cols && !active.empty(); ++c) {
    int pr = -1;
    for (int r : active) {
      auto it = rows[r].begin();
      if (it->first == c && (pr < 0 || rows[r].size() < rows[pr].size())) pr = r;
    }
    if (pr < 0) continue;

    std::map<int, Rational> pivot_row = std::move(rows[pr]);
    Rational lead = pivot_row.begin()->second;
    for (auto& [cc, v] : pivot_row) v /= lead;

    auto eliminate = [&](std::map<int, Rational>& row) {
      auto it = row.find(c);
      if (it == row.end()) return;
      Rational f = it->second;
      for (const auto& [cc, v] : pivot_row) {
        auto [pos, fresh] = row.emplace(cc, 0);
        pos->second -= f * v;
        if (pos->second == 0) row.erase(pos);
      }
    };

    std::vector<int> next_active;
    for (int r : active) {
      if (r == pr) continue;
      eliminate(rows[r]);
      if (!rows[r].empty()) next_active.push_back(r);
    }
    for (auto& [pc, row] : done) eliminate(row);
    active = std::move(next_active);
    done.emplace_back(c, std::move(pivot_row));
  }

  RowReduced out;
  out.reduced = RationalMatrix(static_cast<int>(done.size()), m.cols);
  for (int r = 0; r < static_cast<int>(done.size()); ++r) {
    out.pivot_columns.push_back(done[r].first);
    for (const auto& [c, v] : done[r].second) out.reduced.entries[{r, c}] = v;
  }
  return out;
}

std::string to_triplet_text(const RationalMatrix& m) {
  std::ostringstream os;
  os << m.rows << " " << m.cols << "\n";
  for (const auto& [rc, v] : m.entries)
    os << rc.first << " " << rc.second << " " << to_string(v) << "\n";
  return os.str();
}

RationalMatrix from_triplet_text(const std::string& text) {
  std::istringstream is(text);
  int rows, cols;
  if (!(is >> rows >> cols)) throw Error("triplet text: missing dimensions");
  RationalMatrix m(rows, cols);
  int r, c;
  std::string q;
  while (is >> r >> c >> q) m.set(r, c, parse_rational(q));
  return m;
}

}  // namespace gk
