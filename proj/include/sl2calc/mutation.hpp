#pragma once

namespace sl2calc::mutation {

// Every numeric constant baked into a transformation rule is routed through
// one of these knobs. In normal operation each offset is zero; the
// verification harness perturbs them one at a time to prove that the check
// suites are not vacuous. Set/clear only while no suite is running.
enum class Knob : int {
  gl_induce_shift,
  gl_restrict_shift,
  gl_tensor_shift,
  exceptional_pad,
  pair_induce_shift,
  pair_induce_head,
  siegel_restrict_shift,
  siegel_restrict_head,
  from_gl_head,
  from_gl_exceptional_head,
  same_family_shift,
  tensor_shift,
  tensor_exceptional_base,
  theta_append_o_to_sp,
  theta_append_sp_to_o,
  conj_pair_induce_shift,
  conj_siegel_restrict_shift,
  conj_from_gl_head,
  conj_orthogonal_shift,
  conj_tensor_shift,
  trivial_sp_head,
  trivial_o_head,
  chain_seed_sp,
  chain_seed_o,
  exp_entry,
  rho_pairing,
  q_table_o_two,
  q_table_o_odd,
  q_table_sp_two,
  q_table_sp_odd,
  theta_p_bound,
  li_sp_margin,
  ramanujan_generic,
  ramanujan_boundary,
  count_,
};

constexpr int knob_count() { return static_cast<int>(Knob::count_); }

int offset(Knob knob);
void set(Knob knob, int delta);
void clear_all();
const char* knob_name(Knob knob);

}  // namespace sl2calc::mutation
