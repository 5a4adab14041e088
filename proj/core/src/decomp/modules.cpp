#include "ospd/decomp/modules.hpp"

#include "ospd/decomp/decomposition.hpp"

namespace ospd::decomp {

using repmod::WeightFrame;

namespace {

std::vector<ExactMatrix> entries_of(const superalg::NamedIdeal* ideal) {
  std::vector<ExactMatrix> out;
  if (ideal)
    for (const auto& x : ideal->basis) out.push_back(x.entries());
  return out;
}

void annotate(const repmod::ModuleAction& action, std::vector<repmod::ModuleComponent>& parts,
              const superalg::Superalgebra& a, const std::optional<WeightFrame>& frame) {
  const auto i1 = action.actions_of(entries_of(a.ideal("I1")));
  const auto i2 = action.actions_of(entries_of(a.ideal("I2")));
  const auto rest = action.actions_of(entries_of(a.ideal("U")));
  for (auto& c : parts) {
    c.type = repmod::classify_type(c, i1, i2, rest);
    if (frame) c.highest_weight = repmod::highest_weight(action, c, *frame);
  }
}

}  // namespace

std::optional<WeightFrame> standard_frame(const superalg::Superalgebra& a) {
  const auto& label = a.label();
  const auto sizes = a.sizes();
  const std::size_t t = sizes.total();
  if (label.family == "sl" && label.params.size() == 2) {
    const auto k = static_cast<std::size_t>(label.params[0]);
    const auto n = static_cast<std::size_t>(label.params[1]);
    if (!a.conjugation() && sizes == superalg::BlockSizes{k, n})
      return WeightFrame::concat(repmod::sl_frame(k).mapped(repmod::embed_at(t, 0)),
                                 repmod::sl_frame(n).mapped(repmod::embed_at(t, k)));
    if (a.conjugation() && sizes == superalg::BlockSizes{2 * k, 2 * n} &&
        *a.conjugation() == example_conjugation(k, n))
      return WeightFrame::concat(example_frame_i1(k, n), example_frame_i2(k, n));
    return std::nullopt;
  }
  if (label.family == "osp" && label.form == superalg::OrthoForm::split && !a.conjugation() && sizes.even >= 3)
    return WeightFrame::concat(repmod::o_split_frame(sizes.even).mapped(repmod::embed_at(t, 0)),
                               repmod::sp_frame(sizes.odd / 2).mapped(repmod::embed_at(t, sizes.even)));
  return std::nullopt;
}

ModuleTable analyze_modules(const superalg::Superalgebra& a, std::uint64_t seed) {
  ModuleTable table;
  const auto frame = standard_frame(a);
  table.v_action = repmod::restrict_natural_action(a, repmod::NaturalBlock::V);
  table.w_action = repmod::restrict_natural_action(a, repmod::NaturalBlock::W);
  table.v = repmod::decompose_module(table.v_action, seed);
  table.w = repmod::decompose_module(table.w_action, seed);
  annotate(table.v_action, table.v, a, frame);
  annotate(table.w_action, table.w, a, frame);
  return table;
}

}  // namespace ospd::decomp
