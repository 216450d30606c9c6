#include "excy/altsum.hpp"

#include <map>
#include <mutex>

#include "excy/sylvester.hpp"

namespace excy::altsum {

namespace {

void check_indices(std::span<const Int> b, std::span<const int> idx) {
  for (int i : idx) {
    if (i < 0 || static_cast<size_t>(i) >= b.size()) {
      throw std::invalid_argument("alternating_sum: index " + std::to_string(i) +
                                  " outside exponent vector of size " + std::to_string(b.size()));
    }
  }
}

}  // namespace

Int alternating_sum(std::span<const Int> b, std::span<const int> idx) {
  check_indices(b, idx);
  // B(prefix + [i]) = (product so far) * b_i - B(prefix)
  Int acc = 1;
  Int prefix = 1;
  for (int i : idx) {
    prefix *= b[static_cast<size_t>(i)];
    acc = prefix - acc;
  }
  return acc;
}

Int drop_front_alternating_sum(std::span<const Int> b, std::span<const int> idx) {
  check_indices(b, idx);
  // Suffix values via B([x] + L) = x * B(L) - (-1)^{|L|}, walking backward.
  const size_t k = idx.size();
  Int suffix = 1;  // B of the empty suffix
  Int total = (k % 2 == 0) ? 1 : -1;  // (-1)^k * suffix at j = k
  for (size_t j = k; j-- > 0;) {
    int tail_len = static_cast<int>(k - j - 1);
    suffix = b[static_cast<size_t>(idx[j])] * suffix - ((tail_len % 2 == 0) ? 1 : -1);
    total += (j % 2 == 0) ? suffix : -suffix;
  }
  return total;
}

IndexList middle_out_list(int r, int pairs) {
  IndexList out;
  if (pairs <= 0) return out;
  if (pairs > r + 1) throw std::invalid_argument("middle_out_list: pairs > r+1");
  out.reserve(static_cast<size_t>(2 * pairs));
  for (int j = 1; j <= pairs; ++j) {
    out.push_back(r + j);
    out.push_back(r + 1 - j);
  }
  return out;
}

IndexList ends_in_list(int lo, int hi, int pairs) {
  IndexList out;
  if (pairs <= 0) return out;
  if (hi - lo + 1 != 2 * pairs) throw std::invalid_argument("ends_in_list: bad span");
  out.reserve(static_cast<size_t>(2 * pairs));
  for (int j = 0; j < pairs; ++j) {
    out.push_back(lo + j);
    out.push_back(hi - j);
  }
  return out;
}

IndexList zigzag_m_list(int n) {
  if (n < 2) throw std::invalid_argument("zigzag_m_list: n must be >= 2");
  int r = n / 2;
  return (n % 2 == 0) ? ends_in_list(1, 2 * r, r) : ends_in_list(0, 2 * r + 1, r + 1);
}

IndexList zigzag_u_list(int n) {
  if (n < 2) throw std::invalid_argument("zigzag_u_list: n must be >= 2");
  int r = n / 2;
  return (n % 2 == 0) ? middle_out_list(r, r) : middle_out_list(r, r + 1);
}

namespace {

std::mutex prefix_mutex;
std::map<int, std::shared_ptr<const std::vector<Int>>> prefix_cache;  // keyed by r

std::mutex system_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const ExponentSystem>> system_cache;

// b_0..b_{count-1}: Sylvester numbers up to index r, then
// b_{r+i} = 1 + (b_{r+1-i} - 1)^2 * B(middle_out_list(r, i-1)).
std::shared_ptr<const std::vector<Int>> build_prefix(int r, int count) {
  std::shared_ptr<const std::vector<Int>> base;
  {
    std::lock_guard lock(prefix_mutex);
    auto it = prefix_cache.find(r);
    if (it != prefix_cache.end()) base = it->second;
  }
  if (base && static_cast<int>(base->size()) >= count) return base;

  auto grown = std::make_shared<std::vector<Int>>();
  if (base) *grown = *base;
  grown->reserve(static_cast<size_t>(count));
  while (static_cast<int>(grown->size()) < count) {
    int i = static_cast<int>(grown->size());
    if (i <= r) {
      grown->push_back(sylvester::value(i));
    } else {
      int step = i - r;  // b_{r+step}
      IndexList zz = middle_out_list(r, step - 1);
      Int factor = (*grown)[static_cast<size_t>(r + 1 - step)] - 1;
      grown->push_back(1 + factor * factor * alternating_sum(*grown, zz));
    }
  }
  std::shared_ptr<const std::vector<Int>> result = grown;
  {
    std::lock_guard lock(prefix_mutex);
    auto& slot = prefix_cache[r];
    if (!slot || slot->size() < result->size()) slot = result;
    return slot->size() >= static_cast<size_t>(count) ? slot : result;
  }
}

}  // namespace

std::shared_ptr<const std::vector<Int>> exponent_prefix(int r, int count) {
  if (r < 1) throw std::invalid_argument("exponent_prefix: r must be >= 1");
  if (count < 0 || count > 2 * r + 2) throw std::invalid_argument("exponent_prefix: bad count");
  return build_prefix(r, count);
}

Gtw gtw(int r, int k) {
  if (r < 1) throw std::invalid_argument("gtw: r must be >= 1");
  if (k < 0 || k > r + 1) throw std::invalid_argument("gtw: k out of range 0..r+1");
  auto b = exponent_prefix(r, 2 * r + 2 - k);
  Gtw out;
  IndexList t_list = middle_out_list(r, r + 1 - k);
  out.g = alternating_sum(*b, ends_in_list(k, 2 * r + 1 - k, r + 1 - k));
  out.t = alternating_sum(*b, t_list);
  out.w = (sylvester::value(k) - 1) * drop_front_alternating_sum(*b, t_list) - 1;
  return out;
}

Int m_value(int n) {
  auto b = exponent_prefix(n / 2, n + 1);
  return alternating_sum(*b, zigzag_m_list(n));
}

Int u_value(int n) {
  auto b = exponent_prefix(n / 2, n + 1);
  return alternating_sum(*b, zigzag_u_list(n));
}

namespace {

std::shared_ptr<const ExponentSystem> cached_system(int n, Mode mode) {
  std::lock_guard lock(system_mutex);
  auto it = system_cache.find({n, static_cast<int>(mode)});
  return it == system_cache.end() ? nullptr : it->second;
}

std::shared_ptr<const ExponentSystem> store_system(std::shared_ptr<ExponentSystem> sys) {
  std::lock_guard lock(system_mutex);
  auto& slot = system_cache[{sys->n, static_cast<int>(sys->mode)}];
  if (!slot) slot = std::move(sys);
  return slot;
}

}  // namespace

std::shared_ptr<const ExponentSystem> mld_exponents(int n) {
  if (n < 2) throw std::invalid_argument("mld_exponents: n must be >= 2");
  if (auto hit = cached_system(n, Mode::mld)) return hit;
  auto sys = std::make_shared<ExponentSystem>();
  sys->n = n;
  sys->r = n / 2;
  sys->mode = Mode::mld;
  auto prefix = exponent_prefix(sys->r, n + 1);
  sys->b.assign(prefix->begin(), prefix->begin() + n + 1);
  sys->last_exponent = gtw(sys->r, sys->even() ? 1 : 0).w;
  sys->big_e = 0;
  return store_system(std::move(sys));
}

namespace {
std::mutex core_mutex;
std::map<int, IndexCore> core_cache;
}  // namespace

IndexCore index_core(int n) {
  if (n < 2) throw std::invalid_argument("index_core: n must be >= 2");
  {
    std::lock_guard lock(core_mutex);
    auto it = core_cache.find(n);
    if (it != core_cache.end()) return it->second;
  }
  int r = n / 2;
  auto b = exponent_prefix(r, n);  // b_0..b_{n-1}
  IndexCore out;
  if (n % 2 == 1) {
    // b' = (1 + b_1...b_{2r} + (s_1-1) t_1) / 2, E = (b_1...b_{2r} + 1) / 2,
    // m' = b_0 b' g_1 - b_0 + 1, u' = 2b' - 1
    Int prod = product(std::span<const Int>(b->data() + 1, static_cast<size_t>(2 * r)));
    Int t1 = alternating_sum(*b, middle_out_list(r, r));
    out.u_prime = prod + (sylvester::value(1) - 1) * t1;
    out.b_prime = exact_div(1 + out.u_prime, 2, "index_core: b' odd case");
    out.big_e = exact_div(prod + 1, 2, "index_core: E odd case");
    Int g1 = alternating_sum(*b, ends_in_list(1, 2 * r, r));
    out.m_prime = (*b)[0] * out.b_prime * g1 - (*b)[0] + 1;
  } else {
    // b' = (1 + 2(s_1-1)^2 b_2...b_{2r-1} + 2(s_2-1) t_2) / 3,
    // E = (8 b_2...b_{2r-1} + 1) / 3, m' = b_1 b' g_2 - b_1 + 1
    Int prod = r >= 2 ? product(std::span<const Int>(b->data() + 2, static_cast<size_t>(2 * r - 2)))
                      : Int(1);
    Int t2 = alternating_sum(*b, middle_out_list(r, r - 1));
    Int s1m1 = sylvester::value(1) - 1;
    out.u_prime = s1m1 * prod + sylvester::value(1) * t2;
    out.b_prime =
        exact_div(1 + 2 * s1m1 * s1m1 * prod + 2 * (sylvester::value(2) - 1) * t2, 3,
                  "index_core: b' even case");
    out.big_e = exact_div(8 * prod + 1, 3, "index_core: E even case");
    Int g2 = alternating_sum(*b, ends_in_list(2, 2 * r - 1, r - 1));
    out.m_prime = (*b)[1] * out.b_prime * g2 - (*b)[1] + 1;
  }
  std::lock_guard lock(core_mutex);
  return core_cache.emplace(n, std::move(out)).first->second;
}

std::shared_ptr<const ExponentSystem> index_exponents(int n) {
  if (n < 2) throw std::invalid_argument("index_exponents: n must be >= 2");
  if (auto hit = cached_system(n, Mode::index)) return hit;
  auto sys = std::make_shared<ExponentSystem>();
  sys->n = n;
  sys->r = n / 2;
  sys->mode = Mode::index;
  IndexCore core = index_core(n);
  auto prefix = exponent_prefix(sys->r, n);
  sys->b.assign(prefix->begin(), prefix->begin() + n);
  sys->b.push_back(core.b_prime);
  if (sys->even()) {
    Gtw k2 = gtw(sys->r, 2);
    sys->last_exponent = 4 * k2.g + k2.w;  // v'_{2r}
  } else {
    Gtw k1 = gtw(sys->r, 1);
    sys->last_exponent = k1.g + k1.w;  // v'_{2r+1}
  }
  sys->big_e = core.big_e;
  return store_system(std::move(sys));
}

}  // namespace excy::altsum
