#include "symdiv/chains.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symdiv/error.hpp"

namespace symdiv {

namespace {

using M = MeasureId;
using D = DifferenceId;

Expression zero() { return {"0", {}}; }

Expression measure(std::string label, std::vector<ScaledMeasure> terms) {
  return {std::move(label), std::move(terms)};
}

// c * D_xy expanded over its two base measures.
Expression diff(std::string label, D id, double c = 1.0) {
  const DifferenceSpec& spec = difference_spec(id);
  return {std::move(label),
          {{spec.minuend.measure, c * spec.minuend.coefficient},
           {spec.subtrahend.measure, -c * spec.subtrahend.coefficient}}};
}

Chain ordered(std::string id, std::string group, std::vector<Expression> exprs) {
  std::vector<Relation> links(exprs.size() - 1, Relation::LessEqual);
  return {std::move(id), std::move(group), std::move(exprs), std::move(links)};
}

std::vector<Chain> build_chains() {
  std::vector<Chain> out;

  out.push_back(ordered("BASIC", "BASIC",
                        {measure("DELTA/4", {{M::DELTA, 0.25}}), measure("I", {{M::I, 1.0}}),
                         measure("H", {{M::H, 1.0}}), measure("J/8", {{M::J, 0.125}}),
                         measure("T", {{M::T, 1.0}}), measure("PSI/16", {{M::PSI, 1.0 / 16}})}));

  out.push_back(ordered("OBVIOUS.1", "OBVIOUS",
                        {diff("D_PSIT", D::D_PSIT), diff("D_PSIJ", D::D_PSIJ),
                         diff("D_PSIH", D::D_PSIH), diff("D_PSII", D::D_PSII),
                         diff("D_PSIDELTA", D::D_PSIDELTA)}));
  out.push_back(ordered("OBVIOUS.2", "OBVIOUS",
                        {diff("D_TJ", D::D_TJ), diff("D_TH", D::D_TH), diff("D_TI", D::D_TI),
                         diff("D_TDELTA", D::D_TDELTA)}));
  out.push_back(ordered("OBVIOUS.3", "OBVIOUS",
                        {diff("D_JH", D::D_JH), diff("D_JI", D::D_JI),
                         diff("D_JDELTA", D::D_JDELTA)}));
  out.push_back(
      ordered("OBVIOUS.4", "OBVIOUS", {diff("D_HI", D::D_HI), diff("D_HDELTA", D::D_HDELTA)}));

  out.push_back({"EQUALITY",
                 "EQUALITY",
                 {diff("D_JI", D::D_JI), diff("D_TI/2", D::D_TI, 0.5), diff("D_TJ", D::D_TJ)},
                 {Relation::Equal, Relation::Equal}});

  out.push_back(ordered("REFINE_A", "REFINE_A",
                        {diff("D_IDELTA", D::D_IDELTA), diff("2/3 D_HDELTA", D::D_HDELTA, 2.0 / 3),
                         diff("2 D_HI", D::D_HI, 2.0), diff("D_TJ", D::D_TJ)}));
  out.push_back(ordered("REFINE_B", "REFINE_B",
                        {diff("D_IDELTA", D::D_IDELTA), diff("2/3 D_HDELTA", D::D_HDELTA, 2.0 / 3),
                         diff("1/2 D_JDELTA", D::D_JDELTA, 0.5),
                         diff("1/3 D_TDELTA", D::D_TDELTA, 1.0 / 3), diff("D_TJ", D::D_TJ)}));
  out.push_back(ordered(
      "REFINE_C", "REFINE_C",
      {diff("D_TJ", D::D_TJ), diff("2/3 D_TH", D::D_TH, 2.0 / 3), diff("2 D_JH", D::D_JH, 2.0),
       diff("1/6 D_PSIDELTA", D::D_PSIDELTA, 1.0 / 6), diff("1/5 D_PSII", D::D_PSII, 0.2),
       diff("2/9 D_PSIH", D::D_PSIH, 2.0 / 9), diff("1/4 D_PSIJ", D::D_PSIJ, 0.25),
       diff("1/3 D_PSIT", D::D_PSIT, 1.0 / 3)}));

  out.push_back(ordered(
      "FINAL", "FINAL",
      {measure("DELTA/4", {{M::DELTA, 0.25}}), measure("I", {{M::I, 1.0}}),
       measure("2/3 H + DELTA/12", {{M::H, 2.0 / 3}, {M::DELTA, 1.0 / 12}}),
       measure("H", {{M::H, 1.0}}), measure("J/16 + I/2", {{M::J, 1.0 / 16}, {M::I, 0.5}}),
       measure("T/3 + 2/3 H", {{M::T, 1.0 / 3}, {M::H, 2.0 / 3}}), measure("J/8", {{M::J, 0.125}}),
       measure("2/3 T + DELTA/12", {{M::T, 2.0 / 3}, {M::DELTA, 1.0 / 12}}),
       measure("T", {{M::T, 1.0}}),
       measure("(PSI/2 + 3 J)/32", {{M::PSI, 1.0 / 64}, {M::J, 3.0 / 32}}),
       measure("PSI/16", {{M::PSI, 1.0 / 16}})}));

  out.push_back(ordered("REMARK.1", "REMARK",
                        {measure("I", {{M::I, 1.0}}),
                         measure("2/3 H + DELTA/12", {{M::H, 2.0 / 3}, {M::DELTA, 1.0 / 12}}),
                         measure("H", {{M::H, 1.0}})}));
  out.push_back(ordered("REMARK.2", "REMARK",
                        {measure("H", {{M::H, 1.0}}),
                         measure("J/16 + I/2", {{M::J, 1.0 / 16}, {M::I, 0.5}}),
                         measure("J/8", {{M::J, 0.125}})}));
  out.push_back(ordered("REMARK.3", "REMARK",
                        {measure("H", {{M::H, 1.0}}),
                         measure("3/32 J + DELTA/16", {{M::J, 3.0 / 32}, {M::DELTA, 1.0 / 16}}),
                         measure("J/8", {{M::J, 0.125}})}));
  out.push_back(ordered("REMARK.4", "REMARK",
                        {measure("J/8", {{M::J, 0.125}}),
                         measure("2/3 T + DELTA/12", {{M::T, 2.0 / 3}, {M::DELTA, 1.0 / 12}}),
                         measure("T", {{M::T, 1.0}})}));
  out.push_back(ordered("REMARK.5", "REMARK",
                        {measure("H", {{M::H, 1.0}}),
                         measure("(T + 2 H)/3", {{M::T, 1.0 / 3}, {M::H, 2.0 / 3}}),
                         measure("J/8", {{M::J, 0.125}})}));
  out.push_back(ordered("REMARK.6", "REMARK",
                        {measure("3/2 J + DELTA/4", {{M::J, 1.5}, {M::DELTA, 0.25}}),
                         measure("PSI/16 + 12 H", {{M::PSI, 1.0 / 16}, {M::H, 12.0}})}));
  out.push_back(ordered("REMARK.7", "REMARK",
                        {measure("I", {{M::I, 1.0}}),
                         measure("(PSI/16 + 5/4 DELTA)/6",
                                 {{M::PSI, 1.0 / 96}, {M::DELTA, 5.0 / 24}}),
                         measure("PSI/16", {{M::PSI, 1.0 / 16}})}));
  out.push_back(ordered("REMARK.8", "REMARK",
                        {measure("H", {{M::H, 1.0}}),
                         measure("(PSI/16 + 9 I)/10", {{M::PSI, 1.0 / 160}, {M::I, 0.9}}),
                         measure("PSI/16", {{M::PSI, 1.0 / 16}})}));
  out.push_back(ordered("REMARK.9", "REMARK",
                        {measure("J/8", {{M::J, 0.125}}),
                         measure("(PSI/16 + 8 H)/9", {{M::PSI, 1.0 / 144}, {M::H, 8.0 / 9}}),
                         measure("PSI/16", {{M::PSI, 1.0 / 16}})}));
  out.push_back(ordered("REMARK.10", "REMARK",
                        {measure("T", {{M::T, 1.0}}),
                         measure("(PSI/2 + 3 J)/32", {{M::PSI, 1.0 / 64}, {M::J, 3.0 / 32}}),
                         measure("PSI/16", {{M::PSI, 1.0 / 16}})}));

  out.push_back(ordered("DRAGOMIR.1", "DRAGOMIR",
                        {zero(), measure("J/2 - DELTA", {{M::J, 0.5}, {M::DELTA, -1.0}}),
                         measure("DSTAR/12", {{M::DSTAR, 1.0 / 12}})}));
  out.push_back(ordered("DRAGOMIR.2", "DRAGOMIR",
                        {zero(), measure("PSI/2 - J", {{M::PSI, 0.5}, {M::J, -1.0}}),
                         measure("DSTAR/6", {{M::DSTAR, 1.0 / 6}})}));

  out.push_back(ordered("DRAGOMIR_IMPROVED", "DRAGOMIR_IMPROVED",
                        {diff("D_JDELTA", D::D_JDELTA), diff("1/2 D_PSIJ", D::D_PSIJ, 0.5),
                         diff("2/3 D_PSIT", D::D_PSIT, 2.0 / 3),
                         measure("DSTAR/96", {{M::DSTAR, 1.0 / 96}})}));

  out.push_back(ordered(
      "EXTRA.1", "EXTRA",
      {measure("J/8", {{M::J, 0.125}}),
       measure("(PSI/16 + 12 H - DELTA/4)/12",
               {{M::PSI, 1.0 / 192}, {M::H, 1.0}, {M::DELTA, -1.0 / 48}}),
       measure("(PSI/16 + 8 H)/9", {{M::PSI, 1.0 / 144}, {M::H, 8.0 / 9}}),
       measure("PSI/16", {{M::PSI, 1.0 / 16}})}));
  out.push_back(ordered("EXTRA.2", "EXTRA",
                        {measure("H", {{M::H, 1.0}}),
                         measure("(PSI/16 + 9 I)/10", {{M::PSI, 1.0 / 160}, {M::I, 0.9}}),
                         measure("(PSI/16 + 8 H)/9", {{M::PSI, 1.0 / 144}, {M::H, 8.0 / 9}}),
                         measure("PSI/16", {{M::PSI, 1.0 / 16}})}));

  out.push_back(ordered("DSTAR_CAP", "DSTAR_CAP",
                        {diff("D_PSIT", D::D_PSIT), measure("DSTAR/64", {{M::DSTAR, 1.0 / 64}})}));
  return out;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(sep, start), text.size());
    std::string_view part = text.substr(start, end - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    if (!part.empty()) parts.push_back(part);
    start = end + 1;
  }
  return parts;
}

}  // namespace

double Expression::evaluate(const MeasureTable& table) const noexcept {
  double total = 0.0;
  for (const auto& t : terms) total += t.coefficient * table[t.measure];
  return total;
}

std::string Chain::statement() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < expressions.size(); ++i) {
    if (i > 0) os << (links[i - 1] == Relation::Equal ? " = " : " <= ");
    os << expressions[i].label;
  }
  return os.str();
}

const std::vector<std::string>& chain_groups() {
  static const std::vector<std::string> groups = {
      "BASIC",   "OBVIOUS", "EQUALITY", "REFINE_A",          "REFINE_B", "REFINE_C",
      "FINAL",   "REMARK",  "DRAGOMIR", "DRAGOMIR_IMPROVED", "EXTRA",    "DSTAR_CAP"};
  return groups;
}

const std::vector<Chain>& chain_definitions() {
  static const std::vector<Chain> chains = build_chains();
  return chains;
}

std::vector<const Chain*> select_chains(std::string_view selection) {
  const auto& chains = chain_definitions();
  std::vector<bool> picked(chains.size(), false);
  const auto tokens = split(selection, ',');
  if (tokens.empty()) throw Error(ErrorKind::UnknownId, "empty chain selection");
  for (std::string_view token : tokens) {
    bool matched = false;
    for (std::size_t i = 0; i < chains.size(); ++i) {
      if (token == "all" || chains[i].group == token || chains[i].id == token) {
        picked[i] = true;
        matched = true;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::UnknownId, "unknown chain '" + std::string(token) + "'");
    }
  }
  std::vector<const Chain*> out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (picked[i]) out.push_back(&chains[i]);
  }
  return out;
}

bool ChainEvaluation::holds() const noexcept {
  return std::all_of(links.begin(), links.end(), [](const LinkResult& l) { return l.holds; });
}

ChainEvaluation evaluate_chain(const Chain& chain, const MeasureTable& table) {
  ChainEvaluation ev;
  ev.values.reserve(chain.expressions.size());
  for (const auto& e : chain.expressions) {
    const double v = e.evaluate(table);
    ev.values.push_back(v);
    ev.scale = std::max(ev.scale, std::fabs(v));
  }
  const double tolerance = kChainSlackTolerance * ev.scale;
  for (std::size_t k = 0; k < chain.links.size(); ++k) {
    LinkResult link;
    link.lhs = ev.values[k];
    link.rhs = ev.values[k + 1];
    link.slack = chain.links[k] == Relation::Equal ? -std::fabs(link.rhs - link.lhs)
                                                   : link.rhs - link.lhs;
    link.holds = std::isfinite(link.slack) && link.slack >= -tolerance;
    ev.links.push_back(link);
  }
  return ev;
}

}  // namespace symdiv
