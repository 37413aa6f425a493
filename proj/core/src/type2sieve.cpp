#include "isogeny/type2sieve.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>

#include "isogeny/errors.hpp"
#include "parallel.hpp"

namespace isogeny {

BigReal type_two_bound(const QuadField& F) {
  const BigReal log_term = 16 * log(BigReal(12) * abs(BigReal(static_cast<long long>(F.disc())))) + 26;
  auto f = [&](const BigReal& x) {
    const BigReal inner = 16 * log(x) + log_term;
    return BigReal(x - inner * inner * inner * inner);
  };
  BigReal lo = exp(BigReal(1));
  BigReal hi = BigReal(1e14);
  while (f(hi) <= 0) hi *= 10;
  const BigReal tolerance = BigReal(1e-13);
  while ((hi - lo) > tolerance * hi) {
    const BigReal mid = (lo + hi) / 2;
    if (f(mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return (lo + hi) / 2;
}

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;

// Small primes with a precomputed "split or ramified in K" flag; the q-loop of
// Condition CC nearly always ends inside this table.
class CcChecker {
 public:
  explicit CcChecker(const QuadField& F) : F_(F) {
    for (std::uint64_t q : arith::primes_up_to(kTableLimit)) {
      primes_.push_back(static_cast<std::uint32_t>(q));
      eligible_.push_back(splitting_type(F, q) != SplitType::Inert);
    }
  }

  CcVerdict check(std::uint64_t p) const {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      const std::uint64_t q = primes_[i];
      if (4 * q >= p) return {};
      if (eligible_[i] && violates(p, q)) return {false, q};
    }
    arith::PrimeStream stream(kTableLimit + 1);
    for (;;) {
      const std::uint64_t q = stream.next();
      if (4 * static_cast<arith::uint128>(q) >= p) return {};
      if (splitting_type(F_, q) != SplitType::Inert && violates(p, q)) return {false, q};
    }
  }

 private:
  // q^2 + q + 1 != 0 mod p and q splits in Q(sqrt(-p)).
  static bool violates(std::uint64_t p, std::uint64_t q) {
    const auto wide = static_cast<arith::uint128>(q);
    if ((wide * wide + wide + 1) % p == 0) return false;
    if (q == 2) return p % 8 == 7;
    return arith::jacobi(q - p % q, q) == 1;
  }

  const QuadField& F_;
  std::vector<std::uint32_t> primes_;
  std::vector<bool> eligible_;
};

struct ChunkResult {
  std::vector<std::uint64_t> survivors;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  std::uint64_t tested = 0;
  std::uint64_t largest_witness = 0;
  std::uint64_t largest_witness_p = 0;
};

struct Checkpoint {
  std::uint64_t processed = 0;
  std::vector<std::uint64_t> survivors;
};

constexpr const char* kCheckpointMagic = "isogeny-type2-checkpoint v1";

std::optional<Checkpoint> load_checkpoint(const std::string& path, std::int64_t D) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string magic;
  std::getline(in, magic);
  std::string key;
  std::int64_t file_D = 0;
  Checkpoint cp;
  std::size_t count = 0;
  if (magic != kCheckpointMagic || !(in >> key >> file_D) || key != "D" ||
      !(in >> key >> cp.processed) || key != "processed" || !(in >> key >> count) ||
      key != "survivors") {
    throw InvalidD("checkpoint " + path + " is malformed");
  }
  if (file_D != D) {
    throw InvalidD("checkpoint " + path + " belongs to D = " + std::to_string(file_D));
  }
  cp.survivors.resize(count);
  for (auto& p : cp.survivors) {
    if (!(in >> p)) throw InvalidD("checkpoint " + path + " is truncated");
  }
  return cp;
}

void save_checkpoint(const std::string& path, std::int64_t D, std::uint64_t processed,
                     const std::vector<std::uint64_t>& survivors) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << kCheckpointMagic << "\nD " << D << "\nprocessed " << processed << "\nsurvivors "
        << survivors.size() << "\n";
    for (std::uint64_t p : survivors) out << p << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::uint64_t ceil_u64(const BigReal& x) { return static_cast<std::uint64_t>(ceil(x)); }

}  // namespace

CcVerdict condition_cc(const QuadField& F, std::uint64_t p) {
  static thread_local std::int64_t cached_D = 0;
  static thread_local std::unique_ptr<CcChecker> checker;
  static thread_local std::unique_ptr<QuadField> field;
  if (!checker || cached_D != F.D()) {
    field = std::make_unique<QuadField>(F);
    checker = std::make_unique<CcChecker>(*field);
    cached_D = F.D();
  }
  return checker->check(p);
}

SieveResult sieve(const QuadField& F, std::uint64_t cap, unsigned threads) {
  SieveOptions options;
  options.cap = cap;
  options.threads = threads;
  return sieve(F, options);
}

SieveResult sieve(const QuadField& F, const SieveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  SieveResult result;
  result.bound = type_two_bound(F);
  const std::uint64_t full = ceil_u64(result.bound);
  if (options.cap != 0 && options.cap < 2) throw std::invalid_argument("sieve: cap must be at least 2");
  const std::uint64_t limit = options.cap == 0 ? full : std::min(options.cap, full);
  result.cap = limit;
  result.complete = options.cap == 0 || options.cap >= full;

  std::uint64_t start = 2;
  if (!options.checkpoint_path.empty()) {
    if (auto cp = load_checkpoint(options.checkpoint_path, F.D())) {
      for (std::uint64_t p : cp->survivors) {
        if (p <= limit) result.survivors.push_back(p);
      }
      start = std::min(cp->processed, limit) + 1;
      result.stats.resumed_from = cp->processed;
    }
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(options.chunk_size, 1024);
  const std::uint64_t span = limit >= start ? limit - start + 1 : 0;
  const std::size_t chunk_count = static_cast<std::size_t>((span + chunk - 1) / chunk);

  const CcChecker checker(F);
  std::vector<std::uint32_t> base;
  for (std::uint64_t p : arith::primes_up_to(arith::isqrt(limit) + 1)) {
    base.push_back(static_cast<std::uint32_t>(p));
  }

  std::vector<ChunkResult> chunks(chunk_count);
  std::vector<bool> done(chunk_count, false);
  std::size_t prefix = 0;  // chunks [0, prefix) are finished
  std::vector<std::uint64_t> prefix_survivors = result.survivors;
  std::mutex progress;
  auto last_save = std::chrono::steady_clock::now();

  detail::parallel_for(chunk_count, options.threads, [&](std::size_t i) {
    const std::uint64_t lo = start + i * chunk;
    const std::uint64_t hi = std::min(limit, lo + chunk - 1);
    std::vector<std::uint64_t> primes;
    arith::sieve_segment(lo, hi, base, primes);
    ChunkResult& out = chunks[i];
    for (std::uint64_t p : primes) {
      if (p % 4 != 3) continue;
      ++out.tested;
      const CcVerdict v = checker.check(p);
      if (v.survives) {
        out.survivors.push_back(p);
        continue;
      }
      if (out.samples.size() < options.witness_samples) out.samples.emplace_back(p, *v.witness);
      if (*v.witness > out.largest_witness) {
        out.largest_witness = *v.witness;
        out.largest_witness_p = p;
      }
    }
    if (options.checkpoint_path.empty()) return;
    std::lock_guard lock(progress);
    done[i] = true;
    const std::size_t before = prefix;
    while (prefix < chunk_count && done[prefix]) {
      prefix_survivors.insert(prefix_survivors.end(), chunks[prefix].survivors.begin(),
                              chunks[prefix].survivors.end());
      ++prefix;
    }
    const auto now = std::chrono::steady_clock::now();
    if (prefix > before && (prefix == chunk_count || now - last_save > std::chrono::seconds(5))) {
      const std::uint64_t processed = std::min(limit, start + prefix * chunk - 1);
      save_checkpoint(options.checkpoint_path, F.D(), processed, prefix_survivors);
      last_save = now;
    }
  });

  for (const ChunkResult& c : chunks) {
    result.survivors.insert(result.survivors.end(), c.survivors.begin(), c.survivors.end());
    result.stats.primes_tested += c.tested;
    for (const auto& [p, q] : c.samples) {
      if (result.witnesses.size() < options.witness_samples) result.witnesses.emplace(p, q);
    }
    if (c.largest_witness > result.stats.largest_witness) {
      result.stats.largest_witness = c.largest_witness;
      result.stats.largest_witness_p = c.largest_witness_p;
    }
  }
  if (!options.checkpoint_path.empty() && chunk_count == 0) {
    save_checkpoint(options.checkpoint_path, F.D(), limit, result.survivors);
  }
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace isogeny
