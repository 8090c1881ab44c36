#include "projdes/census.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "projdes/designs.hpp"

namespace projdes {

namespace {

void check_row(const CensusRow& row) {
  const Rational diff = row.rank_Ls - row.rank_L1;
  if (row.n == 1) {
    Rational s(static_cast<long>(row.s));
    Rational expected;
    switch (row.field) {
      case Field::R: expected = Rational(-1); break;
      case Field::C: expected = s - Rational(3); break;
      case Field::H: expected = s * (s + Rational(1)) * (s + Rational(2)) / Rational(6) - Rational(5); break;
    }
    if (diff != expected)
      throw std::logic_error("census row violates the n = 1 difference closed form");
  }
  DesignParams p(row.field, row.n, row.t);
  Rational n2(static_cast<long>(row.n) * row.n);
  Rational m_inv = p.m.inverse();
  if (n2 > Rational(1) + m_inv + m_inv * m_inv && !(diff > Rational(0)))
    throw std::logic_error("census row violates the strict rank inequality");
}

}  // namespace

CensusRow classify(Field field, int n, int s) {
  if (n < 1) throw std::domain_error("census needs n >= 1");
  if (s < 2) throw std::domain_error("census needs s >= 2");
  CensusRow row;
  row.field = field;
  row.n = n;
  row.s = s;
  row.t = 2 * s - 1;
  DesignParams p(field, n, row.t);
  row.rank_L1 = (p.N - p.m) * (p.N + Rational(1)) / p.m;
  row.rank_Ls = rank_last(p);
  row.equal = row.rank_L1 == row.rank_Ls;
  row.bound = design_bound(p);
  return row;
}

std::vector<CensusRow> sweep(const std::vector<Field>& fields, int n_max, int s_max, int jobs) {
  if (n_max < 1 || s_max < 1) throw std::domain_error("sweep needs n_max, s_max >= 1");
  if (jobs < 1) jobs = 1;

  struct Task {
    Field field;
    int n, s;
  };
  std::vector<Task> tasks;
  for (Field f : fields)
    for (int n = 1; n <= n_max; ++n)
      for (int s = 2; s <= s_max; ++s) tasks.push_back({f, n, s});

  std::vector<CensusRow> rows(tasks.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        rows[i] = classify(tasks[i].field, tasks[i].n, tasks[i].s);
        check_row(rows[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  if (jobs == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    size_t count = std::min(static_cast<size_t>(jobs), tasks.size());
    for (size_t j = 0; j < count; ++j) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return rows;
}

std::vector<RationalityRow> rationality_table(int t_max) {
  if (t_max < 1) throw std::domain_error("rationality table needs t_max >= 1");
  std::vector<RationalityRow> rows;
  for (int t = 1; t <= t_max; ++t) {
    bool rational = rp1_rational(t);
    bool expected = t == 1 || t == 2 || t == 3 || t == 5;
    if (rational != expected)
      throw std::logic_error("rationality table disagrees with the known strengths");
    rows.push_back({t, rational});
  }
  return rows;
}

}  // namespace projdes
