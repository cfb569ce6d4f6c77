#include "sails/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string_view>
#include <thread>

namespace sails {

namespace {

std::int64_t isqrt64(std::int64_t x) { return isqrt(BigInt(x)).convert_to<std::int64_t>(); }

struct Checked {
  std::optional<Classification> classification;
  std::vector<std::string> problems;
};

std::string flag_set(const std::vector<Flag>& flags) {
  std::string out;
  for (Flag f : flags) out += to_char(f);
  return out.empty() ? "-" : out;
}

Checked check_one(const ReducedSurd& item) {
  Checked out;
  const QuadraticSurd& alpha = item.surd;
  try {
    Classification cls = classify(alpha);
    const bool palindromic = is_cyclic_palindrome(CyclicWord::make(cls.cf.period()));
    if (cls.flags.empty() == palindromic) {
      out.problems.push_back("flags " + flag_set(cls.flags) + " but cyclic palindrome = " +
                             (palindromic ? "true" : "false"));
    }
    for (const auto& [flag, w] : cls.witnesses) {
      if (!satisfies(flag, w.omega)) {
        out.problems.push_back(std::string("witness ") + to_char(flag) + " " + to_string(w.omega) +
                               " fails its equation");
      }
      if (!serret_equivalent(alpha, w.omega)) {
        out.problems.push_back(std::string("witness ") + to_char(flag) + " " + to_string(w.omega) +
                               " not equivalent");
      }
      if (slope_action(w.certificate, w.omega) != conjugate(w.omega)) {
        out.problems.push_back(std::string("certificate ") + to_char(flag) + " does not swap the lines");
      }
    }
    if (cls.has(Flag::B) != cls.has(Flag::C)) out.problems.push_back("b/c mismatch " + flag_set(cls.flags));
    std::vector<Flag> expected;
    std::copy_if(cls.flags.begin(), cls.flags.end(), std::back_inserter(expected),
                 [](Flag f) { return f != Flag::C; });
    const std::vector<Flag> oracle = shape_oracle(alpha);
    if (oracle != expected) {
      out.problems.push_back("shape oracle " + flag_set(oracle) + " vs flags " + flag_set(cls.flags));
    }
    if (minimal_polynomial(alpha).a == 1 && cls.flags.empty()) {
      out.problems.push_back("quadratic integer without flags");
    }
    out.classification = std::move(cls);
  } catch (const Error& e) {
    out.problems.push_back(std::string(to_string(e.kind())) + ": " + e.what());
  }
  return out;
}

}  // namespace

std::vector<ReducedSurd> reduced_surds(std::int64_t dmax) {
  std::vector<ReducedSurd> out;
  std::vector<std::pair<std::string, QuadraticSurd>> batch;
  for (std::int64_t disc = 5; disc <= dmax; ++disc) {
    if (disc % 4 == 2 || disc % 4 == 3) continue;
    const std::int64_t root = isqrt64(disc);
    if (root * root == disc) continue;
    batch.clear();
    // reduced: B + sqrt D < 2A < sqrt D - B, so -sqrt D < B < 0 and A <= sqrt D
    for (std::int64_t b = -root; b < 0; ++b) {
      if ((b * b - disc) % 4 != 0) continue;
      const std::int64_t ac4 = b * b - disc;  // 4AC < 0
      for (std::int64_t a = 1; 2 * a <= root - b; ++a) {
        if (ac4 % (4 * a) != 0) continue;
        const std::int64_t c = ac4 / (4 * a);
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        QuadraticSurd x = QuadraticSurd::make(-b, 1, 2 * a, disc);
        if (!is_reduced(x)) continue;
        batch.emplace_back(to_string(x), std::move(x));
      }
    }
    std::sort(batch.begin(), batch.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    for (auto& [text, x] : batch) out.push_back({disc, std::move(x)});
  }
  return out;
}

unsigned survey_threads() {
  if (const char* env = std::getenv("SURD_SAILS_THREADS")) {
    const std::string_view text(env);
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
    if (ec == std::errc() && ptr == text.data() + text.size() && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SurveyReport run_survey(std::int64_t dmax, unsigned threads) {
  const std::vector<ReducedSurd> items = reduced_surds(dmax);
  std::vector<Checked> results(items.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) results[i] = check_one(items[i]);
  };
  const unsigned n = std::max(1u, threads == 0 ? survey_threads() : threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(work);
    work();
  }

  SurveyReport report;
  report.records.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string text = to_string(items[i].surd);
    for (auto& p : results[i].problems) report.violations.push_back({text, std::move(p)});
    if (auto& cls = results[i].classification) {
      ++report.flag_sets[flag_set(cls->flags)];
      report.records.push_back({items[i].discriminant, std::move(*cls)});
    }
  }
  return report;
}

}  // namespace sails
