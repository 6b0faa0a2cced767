// Copyright 2026 The Etfkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "etfkit/pipeline.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "etfkit/error.hpp"
#include "etfkit/finite_field.hpp"
#include "etfkit/frame_io.hpp"

namespace etfkit {

namespace {

[[noreturn]] void usage(const std::string& message) {
  throw Error(ErrorCode::kInvalidArgument, message);
}

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::uint32_t log2_exact(std::uint64_t x) {
  std::uint32_t k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

std::string non_prime_power_hint(std::uint64_t n) {
  std::string msg = std::to_string(n) + " is not a prime power";
  if (is_power_of_two(n + 1)) msg += "; use --construction conference-upper";
  return msg;
}

// Field from exactly one of q, (p, m); `n_as_q` when --n names the order.
FiniteField resolve_field(const GenerateRequest& r, std::optional<std::uint64_t> n_as_q) {
  const int ways = (r.q ? 1 : 0) + (n_as_q ? 1 : 0) + ((r.p || r.m) ? 1 : 0);
  if (ways != 1) {
    usage("specify the field size exactly once (--q, --n, or --p with --m)");
  }
  if (r.p || r.m) {
    if (!r.p || !r.m) usage("--p and --m must be given together");
    return FiniteField::make(*r.p, *r.m);
  }
  const std::uint64_t q = r.q ? *r.q : *n_as_q;
  const PrimePower pp = factor_prime_power(q);
  if (pp.p == 0) usage(non_prime_power_hint(q));
  return FiniteField::make(pp.p, pp.m);
}

std::uint32_t resolve_k(const GenerateRequest& r, std::uint64_t offset) {
  if (r.k && r.n) usage("give either --k or --n, not both");
  if (r.k) return *r.k;
  if (!r.n) usage("conference constructions need --k or --n");
  const std::uint64_t size = *r.n + offset;
  if (!is_power_of_two(size) || size < 2) {
    if (offset == 1) usage(std::to_string(*r.n) + " is not of the form 2^k - 1");
    usage(std::to_string(*r.n) + " is not a power of two");
  }
  return log2_exact(size);
}

Frame zauner_from(const GenerateRequest& r) {
  std::optional<std::uint64_t> n_as_q;
  if (r.n) {
    if (*r.n < 2) usage("zauner --n must be q + 1 for an odd prime power q");
    n_as_q = *r.n - 1;
  }
  const FiniteField field = resolve_field(r, n_as_q);
  if (field.characteristic() == 2) {
    usage("zauner needs an odd prime power, got q = " + std::to_string(field.order()));
  }
  const FieldElement c = field.element(r.character_c.value_or(1));
  return zauner_frame(field, c);
}

Frame build_row_frame(Construction c, std::size_t size) {
  switch (c) {
    case Construction::kPaleyUpper:
    case Construction::kPaleyLower: {
      const PrimePower pp = factor_prime_power(size);
      return paley_frame(FiniteField::make(pp.p, pp.m), c == Construction::kPaleyUpper);
    }
    case Construction::kConferenceUpper:
    case Construction::kConferenceLower:
      return conference_core_frame(log2_exact(size + 1),
                                   c == Construction::kConferenceUpper);
    case Construction::kZauner: {
      const PrimePower pp = factor_prime_power(size);
      return zauner_frame(FiniteField::make(pp.p, pp.m));
    }
    case Construction::kConferenceEtf:
      return conference_etf(conference_skew(log2_exact(size)));
    case Construction::kDropOneCanonical:
      break;
  }
  usage("construction not catalogued");
}

}  // namespace

Frame generate_frame(const GenerateRequest& r) {
  const auto construction = parse_construction(r.construction);
  if (!construction) usage("unknown construction \"" + r.construction + "\"");

  switch (*construction) {
    case Construction::kPaleyUpper:
    case Construction::kPaleyLower: {
      if (r.k) usage("--k applies to conference constructions only");
      const FiniteField field = resolve_field(r, r.n);
      if (field.order() % 4 != 3) {
        throw Error(ErrorCode::kWrongResidueClass,
                    "Paley tournaments need q = 3 mod 4, got q = " +
                        std::to_string(field.order()));
      }
      return paley_frame(field, *construction == Construction::kPaleyUpper);
    }
    case Construction::kConferenceUpper:
    case Construction::kConferenceLower: {
      const std::uint32_t k = resolve_k(r, 1);
      if (k < 2) usage("conference constructions need n >= 3 (k >= 2)");
      conference_skew(k);  // size bound check before the expensive part
      return conference_core_frame(k, *construction == Construction::kConferenceUpper);
    }
    case Construction::kConferenceEtf: {
      const std::uint32_t k = resolve_k(r, 0);
      if (k < 2) usage("conference-etf needs n >= 4 (k >= 2)");
      return conference_etf(conference_skew(k));
    }
    case Construction::kZauner:
      return zauner_from(r);
    case Construction::kDropOneCanonical: {
      Frame source = [&] {
        if (r.source == "zauner") return zauner_from(r);
        if (r.source == "conference-etf") {
          const std::uint32_t k = resolve_k(r, 0);
          if (k < 2) usage("conference-etf needs n >= 4 (k >= 2)");
          return conference_etf(conference_skew(k));
        }
        usage("drop-one-canonical source must be zauner or conference-etf");
      }();
      return drop_one_canonical(source, r.drop_index);
    }
  }
  usage("unknown construction");
}

VerificationReport conjecture_experiment(std::uint32_t k, double tol) {
  if (k < 2) usage("the experiment needs k >= 2");
  const SignMatrix c = conference_skew(k);
  const Frame derived = drop_one_canonical(conference_etf(c), 0);
  const ComplexMatrix tournament_gram = gram_upper(extract_core(c));

  VerificationReport report = check_equiangular(derived, tol);
  report.merge(check_tight(derived, tol));
  report.subject = "conference drop-one k=" + std::to_string(k) + " (" +
                   std::to_string(derived.n) + "," + std::to_string(derived.d) + ")";
  report.comparison = gram_equal_up_to_conjugation(gram(derived), tournament_gram, tol);
  return report;
}

std::vector<CatalogRow> build_catalog(std::size_t max_n) {
  if (max_n > kMaxCatalogN) {
    usage("catalog max_n " + std::to_string(max_n) + " exceeds bound " +
          std::to_string(kMaxCatalogN));
  }
  // (construction, size parameter, n, d)
  std::vector<std::tuple<Construction, std::size_t, std::size_t, std::size_t>> plan;
  for (std::size_t n = 3; n <= max_n; ++n) {
    if (is_power_of_two(n + 1)) {
      plan.emplace_back(Construction::kConferenceUpper, n, n, (n + 1) / 2);
      plan.emplace_back(Construction::kConferenceLower, n, n, (n - 1) / 2);
    }
    const PrimePower pp = factor_prime_power(n);
    if (pp.p != 0 && n % 4 == 3) {
      plan.emplace_back(Construction::kPaleyUpper, n, n, (n + 1) / 2);
      plan.emplace_back(Construction::kPaleyLower, n, n, (n - 1) / 2);
    }
    if (pp.p != 0 && pp.p != 2) {
      plan.emplace_back(Construction::kZauner, n, n + 1, (n + 1) / 2);
    }
    if (is_power_of_two(n) && n >= 4) {
      plan.emplace_back(Construction::kConferenceEtf, n, n, n / 2);
    }
  }

  std::vector<CatalogRow> rows;
  rows.reserve(plan.size());
  for (const auto& [construction, size, n, d] : plan) {
    CatalogRow row{n, d, construction, welch_target(n, d), false};
    try {
      const Frame f = build_row_frame(construction, size);
      row.verified = f.n == n && f.d == d && check_equiangular(f).verdict() &&
                     check_tight(f).verdict();
    } catch (const Error&) {
      row.verified = false;
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
    return std::make_tuple(a.n, a.d, construction_name(a.construction)) <
           std::make_tuple(b.n, b.d, construction_name(b.construction));
  });
  return rows;
}

std::string catalog_csv(const std::vector<CatalogRow>& rows) {
  std::ostringstream out;
  out << "n,d,construction,target_overlap_sq,verified\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.d << ',' << construction_name(r.construction) << ','
        << format_double(r.target_overlap_sq) << ',' << (r.verified ? "true" : "false")
        << '\n';
  }
  return out.str();
}

}  // namespace etfkit
