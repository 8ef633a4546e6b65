#include "zschur/witness.hpp"

#include <stdexcept>

#include "zschur/zero_sum.hpp"

namespace zschur {

namespace {

struct FamilyMeta {
  Family id;
  const char* name;
};

constexpr FamilyMeta kFamilies[] = {
    {Family::P3, "p3"},   {Family::T4, "t4"}, {Family::T5, "t5"},
    {Family::T6, "t6"},   {Family::P7, "p7"}, {Family::S32KK, "s32kk"},
};

uint8_t byte(int v) { return static_cast<uint8_t>(v); }

}  // namespace

const char* family_name(Family f) {
  for (const auto& meta : kFamilies)
    if (meta.id == f) return meta.name;
  throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
  for (const auto& meta : kFamilies)
    if (name == meta.name) return meta.id;
  throw std::invalid_argument("unknown family: " + name);
}

bool family_applicable(Family f, int k) {
  switch (f) {
    case Family::P3: return k >= 4 && k % 2 == 0;
    case Family::T4: return k >= 3 && k % 3 == 0;
    case Family::T5: return k >= 3 && k % 3 == 0;
    case Family::T6: return k >= 4 && k % 4 == 0;
    case Family::P7: return k >= 3 && k % 2 == 1;
    case Family::S32KK: return k >= 3;
  }
  return false;
}

void require_applicable(Family f, int k) {
  if (family_applicable(f, k)) return;
  switch (f) {
    case Family::P3:
      throw std::domain_error("family p3 requires even k >= 4");
    case Family::T4:
      throw std::domain_error("family t4 requires 3 | k");
    case Family::T5:
      throw std::domain_error("family t5 requires 3 | k");
    case Family::T6:
      throw std::domain_error("family t6 requires 4 | k");
    case Family::P7:
      throw std::domain_error("family p7 requires odd k >= 3");
    case Family::S32KK:
      throw std::domain_error("family s32kk requires k >= 3");
  }
}

Params family_params(Family f, int k) {
  switch (f) {
    case Family::P3: return {k, 2, Palette::Full};
    case Family::T4: return {k, 3, Palette::Full};
    case Family::T5: return {k, 3, Palette::Binary};
    case Family::T6: return {k, 4, Palette::Full};
    case Family::P7: return {k, k, Palette::Full};
    case Family::S32KK: return {k, k, Palette::Binary};
  }
  throw std::invalid_argument("unknown family");
}

long long family_bound(Family f, int k) {
  const long long kk = k;
  switch (f) {
    case Family::P3: return 2 * kk - 3;
    case Family::T4: return 3 * kk - 3;
    case Family::T5: return 3 * kk - 5;
    case Family::T6: return 4 * kk - 5;
    case Family::P7: return 2 * (kk * kk - kk - 1);
    case Family::S32KK: return kk * kk - kk - 1;
  }
  throw std::invalid_argument("unknown family");
}

long long family_length(Family f, int k) { return family_bound(f, k) - 1; }

std::vector<Run> family_runs(Family f, int k) {
  require_applicable(f, k);
  switch (f) {
    case Family::P3:
      return {{{0}, k - 2}, {{1}, k - 2}};
    case Family::T4:
      return {{{0, 1, 2}, k / 3 - 1},
              {{0, 1, 1}, k / 3},
              {{0, 2, 1}, k / 3 - 1},
              {{0, 2}, 1}};
    case Family::T5:
      return {{{0}, k - 2}, {{1}, 2 * k - 4}};
    case Family::T6:
      return {{{0, 1, 2, 3}, k / 4 - 1},
              {{0, 1, 2, 0}, 1},
              {{0, 2, 2, 0}, k / 2 - 1},
              {{3, 2, 1, 0}, k / 4 - 1},
              {{3, 2}, 1}};
    case Family::P7:
      return {{{0, 1}, k - 2},
              {{0, byte(k - 1)}, (k - 1) * (k - 2)},
              {{0, 1}, k - 2},
              {{0}, 1}};
    case Family::S32KK:
      return {{{0}, k - 2}, {{1}, (k - 2) * (k - 1)}, {{0}, k - 2}};
  }
  throw std::invalid_argument("unknown family");
}

Coloring build_witness(Family f, int k) {
  const auto runs = family_runs(f, k);
  std::vector<uint8_t> colors;
  colors.reserve(static_cast<size_t>(family_length(f, k)));
  for (const auto& run : runs)
    for (int rep = 0; rep < run.repeat; ++rep)
      colors.insert(colors.end(), run.pattern.begin(), run.pattern.end());
  if (static_cast<long long>(colors.size()) != family_length(f, k))
    throw std::logic_error("witness expansion length disagrees with the closed form");
  return Coloring(std::move(colors));
}

VerificationReport verify_witness(Family f, int k) {
  Coloring chi = build_witness(f, k);
  const Params p = family_params(f, k);
  VerificationReport report;
  report.family = family_name(f);
  report.k = k;
  report.length = chi.length();
  report.claimed_bound = family_bound(f, k);
  auto hit = find_any_zero_sum(chi, p);
  report.avoids = !hit.has_value();
  if (hit) {
    report.counterexample_color_sum = color_sum(*hit, chi, p.r);
    report.counterexample = std::move(hit);
  }
  return report;
}

double top_target_solution_estimate(Family f, int k) {
  const int length = static_cast<int>(family_length(f, k));
  const int parts = k - 1;
  if (length < parts) return 0.0;
  // partitions of length into exactly `parts` positive parts
  // = partitions of length - parts into at most `parts` parts
  const int shifted = length - parts;
  std::vector<double> atmost(static_cast<size_t>(shifted) + 1, 0.0);
  atmost[0] = 1.0;
  for (int part = 1; part <= parts; ++part)
    for (int t = part; t <= shifted; ++t)
      atmost[static_cast<size_t>(t)] += atmost[static_cast<size_t>(t - part)];
  return atmost[static_cast<size_t>(shifted)];
}

ConjectureReport conjecture_evidence(Question q, std::span<const int> ks,
                                     const SearchLimits& limits) {
  ConjectureReport report;
  report.question = q;
  for (int k : ks) {
    Params p{k, 0, Palette::Full};
    long long conjectured = 0;
    switch (q) {
      case Question::Q1:
        p.r = 3;
        conjectured = 3LL * k - 3;
        break;
      case Question::Q2:
        p.r = 4;
        conjectured = 4LL * k - 5;
        break;
      case Question::Q4:
        p.r = k;
        conjectured = static_cast<long long>(k) * k;
        break;
    }
    ConjectureRow row;
    row.k = k;
    row.conjectured = conjectured;
    row.computed = compute_number(p, limits);
    if (q == Question::Q4) {
      row.consistent = row.computed.status == Status::Finite;
      if (row.consistent)
        row.ratio = static_cast<double>(row.computed.value) / static_cast<double>(conjectured);
    } else {
      row.consistent =
          row.computed.status == Status::Finite && row.computed.value == conjectured;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace zschur
