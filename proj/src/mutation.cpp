#include "sl2calc/mutation.hpp"

#include <array>
#include <atomic>

namespace sl2calc::mutation {

namespace {
std::array<std::atomic<int>, static_cast<size_t>(Knob::count_)> g_offsets{};
}

int offset(Knob knob) {
  return g_offsets[static_cast<size_t>(knob)].load(std::memory_order_relaxed);
}

void set(Knob knob, int delta) {
  g_offsets[static_cast<size_t>(knob)].store(delta, std::memory_order_relaxed);
}

void clear_all() {
  for (auto& o : g_offsets) o.store(0, std::memory_order_relaxed);
}

const char* knob_name(Knob knob) {
  switch (knob) {
    case Knob::gl_induce_shift: return "gl_induce_shift";
    case Knob::gl_restrict_shift: return "gl_restrict_shift";
    case Knob::gl_tensor_shift: return "gl_tensor_shift";
    case Knob::exceptional_pad: return "exceptional_pad";
    case Knob::pair_induce_shift: return "pair_induce_shift";
    case Knob::pair_induce_head: return "pair_induce_head";
    case Knob::siegel_restrict_shift: return "siegel_restrict_shift";
    case Knob::siegel_restrict_head: return "siegel_restrict_head";
    case Knob::from_gl_head: return "from_gl_head";
    case Knob::from_gl_exceptional_head: return "from_gl_exceptional_head";
    case Knob::same_family_shift: return "same_family_shift";
    case Knob::tensor_shift: return "tensor_shift";
    case Knob::tensor_exceptional_base: return "tensor_exceptional_base";
    case Knob::theta_append_o_to_sp: return "theta_append_o_to_sp";
    case Knob::theta_append_sp_to_o: return "theta_append_sp_to_o";
    case Knob::conj_pair_induce_shift: return "conj_pair_induce_shift";
    case Knob::conj_siegel_restrict_shift: return "conj_siegel_restrict_shift";
    case Knob::conj_from_gl_head: return "conj_from_gl_head";
    case Knob::conj_orthogonal_shift: return "conj_orthogonal_shift";
    case Knob::conj_tensor_shift: return "conj_tensor_shift";
    case Knob::trivial_sp_head: return "trivial_sp_head";
    case Knob::trivial_o_head: return "trivial_o_head";
    case Knob::chain_seed_sp: return "chain_seed_sp";
    case Knob::chain_seed_o: return "chain_seed_o";
    case Knob::exp_entry: return "exp_entry";
    case Knob::rho_pairing: return "rho_pairing";
    case Knob::q_table_o_two: return "q_table_o_two";
    case Knob::q_table_o_odd: return "q_table_o_odd";
    case Knob::q_table_sp_two: return "q_table_sp_two";
    case Knob::q_table_sp_odd: return "q_table_sp_odd";
    case Knob::theta_p_bound: return "theta_p_bound";
    case Knob::li_sp_margin: return "li_sp_margin";
    case Knob::ramanujan_generic: return "ramanujan_generic";
    case Knob::ramanujan_boundary: return "ramanujan_boundary";
    case Knob::count_: break;
  }
  return "?";
}

}  // namespace sl2calc::mutation
