#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "reductions/gadgets.hpp"

namespace reductions {

namespace {

using boost::multiprecision::bit_test;
using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

// ---------------------------------------------------------------------------
// Circuit construction with hash-consing and constant folding. Every saved
// gate is a saved agent downstream, so the builder is aggressive about
// folding; dead gates left over from folding are pruned at the end.

class CircuitBuilder {
 public:
  using Num = std::vector<int>;  // unsigned integer as wires, LSB first

  int input() { return c_.add_input(); }

  int constant(bool v) {
    int& id = const_id_[v ? 1 : 0];
    if (id < 0) id = c_.add_const(v);
    return id;
  }

  int not_(int a) {
    bool v;
    if (const_of(a, v)) return constant(!v);
    if (c_.gates[static_cast<std::size_t>(a)].op == GateOp::NOT) {
      return c_.gates[static_cast<std::size_t>(a)].a;
    }
    return memo(GateOp::NOT, a, -1);
  }

  int and_(int a, int b) {
    bool v;
    if (const_of(a, v)) return v ? b : constant(false);
    if (const_of(b, v)) return v ? a : constant(false);
    if (a == b) return a;
    if (negates(a, b)) return constant(false);
    if (a > b) std::swap(a, b);
    return memo(GateOp::AND, a, b);
  }

  int or_(int a, int b) {
    bool v;
    if (const_of(a, v)) return v ? constant(true) : b;
    if (const_of(b, v)) return v ? constant(true) : a;
    if (a == b) return a;
    if (negates(a, b)) return constant(true);
    if (a > b) std::swap(a, b);
    return memo(GateOp::OR, a, b);
  }

  int nand_(int a, int b) { return not_(and_(a, b)); }

  int xor_(int a, int b) {
    bool v;
    if (const_of(a, v)) return v ? not_(b) : b;
    if (const_of(b, v)) return v ? not_(a) : a;
    if (a == b) return constant(false);
    if (negates(a, b)) return constant(true);
    // Four-gadget ladder: the physical mapping fuses each not(and) pair into
    // a single agent, and the inner nand is shared with the carry path.
    const int m = nand_(a, b);
    return nand_(nand_(a, m), nand_(b, m));
  }

  int mux(int sel, int on_true, int on_false) {
    return or_(and_(sel, on_true), and_(not_(sel), on_false));
  }

  // {sum, carry}; nine gadgets per fresh full adder once fused.
  std::pair<int, int> full_add(int a, int b, int cin) {
    const int m = nand_(a, b);
    const int x = nand_(nand_(a, m), nand_(b, m));
    const int m2 = nand_(x, cin);
    const int sum = nand_(nand_(x, m2), nand_(cin, m2));
    const int carry = nand_(m2, m);
    return {sum, carry};
  }

  int bit(const Num& a, std::size_t i) {
    return i < a.size() ? a[i] : constant(false);
  }

  Num add(const Num& a, const Num& b) {
    Num out;
    const std::size_t w = std::max(a.size(), b.size());
    int carry = constant(false);
    for (std::size_t i = 0; i < w; ++i) {
      auto [s, c] = full_add(bit(a, i), bit(b, i), carry);
      out.push_back(s);
      carry = c;
    }
    out.push_back(carry);
    trim(out);
    return out;
  }

  Num const_num(const Int& k) {
    Num out;
    if (k <= 0) return out;
    for (unsigned i = 0; i <= msb(k); ++i) out.push_back(constant(bit_test(k, i)));
    return out;
  }

  Num add_const(const Num& a, const Int& k) { return add(a, const_num(k)); }

  Num mul_const(const Num& a, const Int& k) {
    Num acc;
    if (k <= 0 || a.empty()) return acc;
    for (unsigned i = 0; i <= msb(k); ++i) {
      if (!bit_test(k, i)) continue;
      Num shifted(i, constant(false));
      shifted.insert(shifted.end(), a.begin(), a.end());
      acc = add(acc, shifted);
    }
    return acc;
  }

  // Column-compressing popcount: each full adder folds three bits of one
  // weight into one of the same weight plus a carry, so the adder count stays
  // linear in the number of bits.
  Num popcount(std::vector<int> bits) {
    std::vector<std::vector<int>> cols;
    cols.push_back(std::move(bits));
    for (std::size_t w = 0; w < cols.size(); ++w) {
      while (cols[w].size() >= 2) {
        if (cols.size() == w + 1) cols.emplace_back();
        if (cols[w].size() >= 3) {
          const int a = pop_back(cols[w]);
          const int b = pop_back(cols[w]);
          const int c = pop_back(cols[w]);
          auto [s, carry] = full_add(a, b, c);
          cols[w].push_back(s);
          cols[w + 1].push_back(carry);
          if (cols[w].size() < 3) break;
        } else {
          const int a = pop_back(cols[w]);
          const int b = pop_back(cols[w]);
          cols[w].push_back(xor_(a, b));
          cols[w + 1].push_back(and_(a, b));
          break;
        }
      }
    }
    Num out;
    for (const auto& col : cols) out.push_back(col.empty() ? constant(false) : col[0]);
    trim(out);
    return out;
  }

  // a >= b, as the carry out of a + ~b + 1.
  int geq(const Num& a, const Num& b) {
    const std::size_t w = std::max(a.size(), b.size());
    int carry = constant(true);
    for (std::size_t i = 0; i < w; ++i) {
      carry = full_add(bit(a, i), not_(bit(b, i)), carry).second;
    }
    return carry;
  }

  int gt(const Num& a, const Num& b) { return not_(geq(b, a)); }

  BooleanCircuit take(std::vector<int> outputs) {
    c_.outputs = std::move(outputs);
    return std::move(c_);
  }

 private:
  static int pop_back(std::vector<int>& v) {
    const int x = v.back();
    v.pop_back();
    return x;
  }

  void trim(Num& a) {
    bool v;
    while (!a.empty() && const_of(a.back(), v) && !v) a.pop_back();
  }

  bool const_of(int id, bool& v) const {
    const Gate& g = c_.gates[static_cast<std::size_t>(id)];
    if (g.op != GateOp::CONST) return false;
    v = g.value;
    return true;
  }

  bool negates(int a, int b) const {
    const Gate& ga = c_.gates[static_cast<std::size_t>(a)];
    const Gate& gb = c_.gates[static_cast<std::size_t>(b)];
    return (ga.op == GateOp::NOT && ga.a == b) || (gb.op == GateOp::NOT && gb.a == a);
  }

  int memo(GateOp op, int a, int b) {
    const auto key = std::make_tuple(op, a, b);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int id = -1;
    switch (op) {
      case GateOp::NOT:
        id = c_.add_not(a);
        break;
      case GateOp::AND:
        id = c_.add_and(a, b);
        break;
      case GateOp::OR:
        id = c_.add_or(a, b);
        break;
      default:
        throw ValidationError("memo supports NOT/AND/OR only");
    }
    memo_.emplace(key, id);
    return id;
  }

  BooleanCircuit c_;
  int const_id_[2] = {-1, -1};
  std::map<std::tuple<GateOp, int, int>, int> memo_;
};

// Drop gates unreachable from the outputs. INPUT gates always survive: their
// count and order are the wiring contract with the physical layer.
BooleanCircuit prune_dead(const BooleanCircuit& c) {
  std::vector<char> live(c.gates.size(), 0);
  std::vector<int> stack;
  for (int o : c.outputs) stack.push_back(o);
  while (!stack.empty()) {
    const int g = stack.back();
    stack.pop_back();
    if (live[static_cast<std::size_t>(g)]) continue;
    live[static_cast<std::size_t>(g)] = 1;
    const Gate& gate = c.gates[static_cast<std::size_t>(g)];
    if (gate.a >= 0) stack.push_back(gate.a);
    if (gate.b >= 0) stack.push_back(gate.b);
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (c.gates[i].op == GateOp::INPUT) live[i] = 1;
  }

  BooleanCircuit out;
  std::vector<int> remap(c.gates.size(), -1);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (!live[i]) continue;
    Gate g = c.gates[i];
    if (g.a >= 0) g.a = remap[static_cast<std::size_t>(g.a)];
    if (g.b >= 0) g.b = remap[static_cast<std::size_t>(g.b)];
    remap[i] = static_cast<int>(out.gates.size());
    out.gates.push_back(g);
  }
  out.outputs.reserve(c.outputs.size());
  for (int o : c.outputs) out.outputs.push_back(remap[static_cast<std::size_t>(o)]);
  return out;
}

// ---------------------------------------------------------------------------
// Read band: on the significant region every window's cut sits within
// delta_T + n * delta_w of the window midpoint, so sensors outside that band
// read compile-time constants and stay unwired.

struct BandSpec {
  long long lo = 0;  // in-window sensor offsets, [lo, hi)
  long long hi = 0;
};

BandSpec read_band(const ReductionParams& params) {
  const long long per = params.p_huge() / params.n;
  const Rational w = params.delta_T + params.n * params.delta_w + 2 * params.delta_tiny;
  const Rational half(1, 2);
  BandSpec band;
  band.lo = std::max<long long>(0, rat_floor((half - w) / params.delta_tiny).convert_to<long long>());
  band.hi = std::min<long long>(per, rat_ceil((half + w) / params.delta_tiny).convert_to<long long>());
  if (band.lo >= band.hi) throw ValidationError("sensor read band is empty");
  return band;
}

// ---------------------------------------------------------------------------
// Exact threshold tests. Window counts c_w (number of banded sensors strictly
// left of window w's cut) determine the decoded cut offsets
//   v_w = (band_lo + c_w - 1/2) * delta_tiny,
// and every wall test is a rational-linear inequality in the c_w, compiled to
// an integer comparison after clearing denominators. Strict ">" matches the
// tie-downward cubelet convention.

struct LinForm {
  std::vector<Rational> coef;  // per window, multiplying c_w
  Rational cst;
};

// One shared positive/negative accumulator pair per form; each wall only adds
// its own constant. Returns [form > wall] per wall.
std::vector<int> compile_wall_tests(CircuitBuilder& b, const LinForm& form,
                                    const std::vector<Rational>& walls,
                                    const std::vector<CircuitBuilder::Num>& counts) {
  Int d(1);
  for (const auto& r : form.coef) {
    if (r != 0) d = lcm(d, denominator(r));
  }
  if (form.cst != 0) d = lcm(d, denominator(form.cst));
  for (const auto& w : walls) {
    if (w != 0) d = lcm(d, denominator(w));
  }

  CircuitBuilder::Num pos;
  CircuitBuilder::Num neg;
  for (std::size_t w = 0; w < form.coef.size(); ++w) {
    const Int m = numerator(Rational(form.coef[w] * d));
    if (m > 0) pos = b.add(pos, b.mul_const(counts[w], m));
    if (m < 0) neg = b.add(neg, b.mul_const(counts[w], -m));
  }

  std::vector<int> out;
  out.reserve(walls.size());
  for (const auto& wall : walls) {
    // form > wall  <=>  pos + cst > neg + wall (scaled by d)
    const Int k = numerator(Rational((wall - form.cst) * d));
    if (k >= 0) {
      out.push_back(b.gt(pos, b.add_const(neg, k)));
    } else {
      out.push_back(b.gt(b.add_const(pos, -k), neg));
    }
  }
  return out;
}

std::array<int, 7> one_hot_digits(CircuitBuilder& b, const std::vector<int>& walls) {
  std::array<int, 7> d{};
  d[0] = b.not_(walls[0]);
  for (int c = 1; c < 6; ++c) d[c] = b.and_(walls[static_cast<std::size_t>(c) - 1],
                                            b.not_(walls[static_cast<std::size_t>(c)]));
  d[6] = walls[5];
  return d;
}

// ---------------------------------------------------------------------------
// Physical expansion of the circuit: every logic gate becomes one or two
// agents whose transmission gap carries the gate's value as its A+ bit.
// A NOT-shaped agent's gap negates its input under either entry parity; an
// OR/AND-shaped agent's gap computes NAND or NOR depending on the entry
// parity, so not(and(..)) and not(or(..)) pairs fuse into a single agent with
// the shape chosen per slot, and bare and/or gates append one NOT agent.

enum class PhysKind { SENSOR, BLANKET, NOTG, NANDG, NORG, CONSTG, DRIVER };

struct PhysOp {
  PhysKind kind = PhysKind::NOTG;
  int in_a = -1;  // phys wires read
  int in_b = -1;
  int out_a = -1;  // wires produced (BLANKET: two gaps)
  int out_b = -1;
  long long index = 0;  // sensor/blanket j, driver signed colour
  bool want = false;    // CONSTG value
  long long slot = -1;  // assigned during placement
};

struct PhysWire {
  int op = -1;
  int sub = 0;  // blanket: 0 = left gap, 1 = right gap
  int consumers = 0;
  int next = 0;
};

struct Expansion {
  std::vector<PhysOp> ops;
  std::vector<PhysWire> wires;

  int wire(int op, int sub) {
    wires.push_back(PhysWire{op, sub, 0, 0});
    return static_cast<int>(wires.size()) - 1;
  }
};

Expansion expand_circuit(const BooleanCircuit& c, const ReductionParams& params,
                         const BandSpec& band) {
  const int n = params.n;
  const long long p_huge = params.p_huge();
  const long long per = p_huge / n;

  Expansion e;
  std::vector<int> sensor_wire(static_cast<std::size_t>(p_huge));
  for (long long j = 0; j < p_huge; ++j) {
    PhysOp op;
    op.kind = PhysKind::SENSOR;
    op.index = j + 1;
    op.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
    sensor_wire[static_cast<std::size_t>(j)] = op.out_a;
    e.ops.push_back(op);
  }
  std::vector<std::pair<int, int>> blanket_wires;
  for (int j = 2; j <= n; ++j) {
    PhysOp op;
    op.kind = PhysKind::BLANKET;
    op.index = j;
    op.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
    op.out_b = e.wire(static_cast<int>(e.ops.size()), 1);
    blanket_wires.emplace_back(op.out_a, op.out_b);
    e.ops.push_back(op);
  }

  // Input binding, mirroring the encoder-logic input order.
  std::vector<int> bound;
  for (int w = 0; w < n; ++w) {
    for (long long t = band.lo; t < band.hi; ++t) {
      bound.push_back(sensor_wire[static_cast<std::size_t>(w * per + t)]);
    }
  }
  for (const auto& [l, r] : blanket_wires) {
    bound.push_back(l);
    bound.push_back(r);
  }
  bound.push_back(sensor_wire[0]);  // x_REF

  // Fusion pre-pass: an and/or gate whose only consumer is a NOT collapses
  // into that NOT's agent.
  std::vector<int> refs(c.gates.size(), 0);
  std::vector<int> sole(c.gates.size(), -1);
  auto use = [&](int x, int g) {
    ++refs[static_cast<std::size_t>(x)];
    sole[static_cast<std::size_t>(x)] = refs[static_cast<std::size_t>(x)] == 1 ? g : -2;
  };
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    if (c.gates[g].a >= 0) use(c.gates[g].a, static_cast<int>(g));
    if (c.gates[g].b >= 0) use(c.gates[g].b, static_cast<int>(g));
  }
  for (int o : c.outputs) use(o, -2);

  std::vector<int> fused_into(c.gates.size(), -1);
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    if (c.gates[g].op != GateOp::NOT) continue;
    const int x = c.gates[g].a;
    const GateOp xop = c.gates[static_cast<std::size_t>(x)].op;
    if ((xop == GateOp::AND || xop == GateOp::OR) && sole[static_cast<std::size_t>(x)] == static_cast<int>(g)) {
      fused_into[static_cast<std::size_t>(x)] = static_cast<int>(g);
    }
  }

  std::vector<int> phys(c.gates.size(), -1);
  std::size_t next_input = 0;
  for (std::size_t g = 0; g < c.gates.size(); ++g) {
    const Gate& gate = c.gates[g];
    switch (gate.op) {
      case GateOp::INPUT:
        phys[g] = bound.at(next_input++);
        break;
      case GateOp::CONST: {
        PhysOp op;
        op.kind = PhysKind::CONSTG;
        op.want = gate.value;
        op.index = static_cast<long long>(g);
        op.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
        phys[g] = op.out_a;
        e.ops.push_back(op);
        break;
      }
      case GateOp::AND:
      case GateOp::OR: {
        if (fused_into[g] >= 0) break;  // emitted by the consuming NOT
        PhysOp inner;
        inner.kind = gate.op == GateOp::AND ? PhysKind::NANDG : PhysKind::NORG;
        inner.in_a = phys[static_cast<std::size_t>(gate.a)];
        inner.in_b = phys[static_cast<std::size_t>(gate.b)];
        inner.index = static_cast<long long>(g);
        inner.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
        e.ops.push_back(inner);
        PhysOp fix;
        fix.kind = PhysKind::NOTG;
        fix.in_a = inner.out_a;
        fix.index = static_cast<long long>(g);
        fix.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
        phys[g] = fix.out_a;
        e.ops.push_back(fix);
        break;
      }
      case GateOp::NOT: {
        const int x = gate.a;
        PhysOp op;
        op.index = static_cast<long long>(g);
        if (fused_into[static_cast<std::size_t>(x)] == static_cast<int>(g)) {
          const Gate& host = c.gates[static_cast<std::size_t>(x)];
          op.kind = host.op == GateOp::AND ? PhysKind::NANDG : PhysKind::NORG;
          op.in_a = phys[static_cast<std::size_t>(host.a)];
          op.in_b = phys[static_cast<std::size_t>(host.b)];
        } else {
          op.kind = PhysKind::NOTG;
          op.in_a = phys[static_cast<std::size_t>(x)];
        }
        op.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
        phys[g] = op.out_a;
        e.ops.push_back(op);
        break;
      }
    }
  }

  for (std::size_t o = 0; o < c.outputs.size(); ++o) {
    PhysOp op;
    op.kind = PhysKind::DRIVER;
    op.in_a = phys[static_cast<std::size_t>(c.outputs[o])];
    const long long k = static_cast<long long>(o) / 2 + 1;
    op.index = o % 2 == 0 ? k : -k;
    op.out_a = e.wire(static_cast<int>(e.ops.size()), 0);
    e.ops.push_back(op);
  }

  for (const PhysOp& op : e.ops) {
    if (op.in_a >= 0) ++e.wires[static_cast<std::size_t>(op.in_a)].consumers;
    if (op.in_b >= 0) ++e.wires[static_cast<std::size_t>(op.in_b)].consumers;
    if (op.kind == PhysKind::DRIVER) ++e.wires[static_cast<std::size_t>(op.out_a)].consumers;
  }
  return e;
}

// ---------------------------------------------------------------------------
// Slot placement. Entry parity of slot s (assuming an even slot count per
// encoder) is A+ iff n + s is even; NAND/NOR agents pick their shape from it,
// const agents insert a parity filler when the slot would produce the wrong
// value, and a trailing filler keeps the per-encoder slot count even.

struct AgentTemplate {
  AgentRole role = AgentRole::CE;
  long long slot = -1;
  long long index = 0;
  std::vector<GadgetBlock> blocks;  // region-relative; empty for sensor/blanket
  long long feedback_colour = 0;    // DRIVER only
  Interval feedback_window{};       // DRIVER only
};

struct Placement {
  std::vector<AgentTemplate> agents;
  long long slots = 0;
};

Placement place_ops(Expansion& e, const ReductionParams& params) {
  const int n = params.n;
  Placement out;
  long long s = 0;

  auto entry_is_plus = [&](long long slot) { return (n + slot) % 2 == 0; };

  auto producer_window = [&](int wire_id) -> Interval {
    const PhysWire& w = e.wires[static_cast<std::size_t>(wire_id)];
    const PhysOp& op = e.ops[static_cast<std::size_t>(w.op)];
    const Rational lo(op.slot);
    Interval base{lo + Rational(1, 4), lo + Rational(3, 4)};
    if (op.kind == PhysKind::BLANKET) {
      base = w.sub == 0 ? Interval{lo + Rational(1, 4), lo + Rational(2, 5)}
                        : Interval{lo + Rational(3, 5), lo + Rational(3, 4)};
    }
    return base;
  };

  auto consume = [&](int wire_id) -> Interval {
    PhysWire& w = e.wires[static_cast<std::size_t>(wire_id)];
    const Interval base = producer_window(wire_id);
    const Rational len = base.hi - base.lo;
    const int c = w.next++;
    if (c >= w.consumers) throw ValidationError("wire consumed more often than counted");
    return Interval{base.lo + len * c / w.consumers, base.lo + len * (c + 1) / w.consumers};
  };

  auto filler = [&]() {
    AgentTemplate t;
    t.role = AgentRole::PARITY;
    t.slot = s;
    t.index = 0;
    t.blocks.push_back(GadgetBlock{Rational(s) + Rational(2, 5), Rational(s) + Rational(3, 5),
                                   Rational(1), BlockKind::PARITY});
    out.agents.push_back(std::move(t));
    ++s;
  };

  for (PhysOp& op : e.ops) {
    AgentTemplate t;
    t.index = op.index;
    switch (op.kind) {
      case PhysKind::SENSOR:
        t.role = AgentRole::SENSOR;
        break;
      case PhysKind::BLANKET:
        t.role = AgentRole::BLANKET;
        break;
      case PhysKind::CONSTG: {
        // The gap right of the pinned cut reads A- flipped once: value is
        // [entry == A-]. Insert a filler when the slot disagrees.
        if (entry_is_plus(s) != !op.want) filler();
        t.role = AgentRole::CONST;
        const Rational lo(s);
        t.blocks.push_back(GadgetBlock{lo + Rational(1, 20), lo + Rational(2, 20), Rational(1, 2),
                                       BlockKind::THIN_DENSE});
        t.blocks.push_back(GadgetBlock{lo + Rational(3, 20), lo + Rational(4, 20), Rational(1, 2),
                                       BlockKind::THIN_DENSE});
        break;
      }
      case PhysKind::NOTG:
      case PhysKind::DRIVER: {
        t.role = op.kind == PhysKind::DRIVER ? AgentRole::DRIVER : AgentRole::GATE_NOT;
        op.slot = s;  // consume() below never reads this op's own wire
        const Interval in = consume(op.in_a);
        t.blocks = build_gate_gadget(GateKind::NOT, {in}, Interval{Rational(s), Rational(s + 1)});
        break;
      }
      case PhysKind::NANDG:
      case PhysKind::NORG: {
        const bool plus = entry_is_plus(s);
        GateKind shape;
        if (op.kind == PhysKind::NANDG) {
          shape = plus ? GateKind::OR : GateKind::AND;
        } else {
          shape = plus ? GateKind::AND : GateKind::OR;
        }
        t.role = shape == GateKind::OR ? AgentRole::GATE_OR : AgentRole::GATE_AND;
        const Interval in_a = consume(op.in_a);
        const Interval in_b = consume(op.in_b);
        t.blocks =
            build_gate_gadget(shape, {in_a, in_b}, Interval{Rational(s), Rational(s + 1)});
        break;
      }
    }
    op.slot = s;
    t.slot = s;
    if (op.kind == PhysKind::DRIVER) {
      t.feedback_colour = op.index;
      op.slot = s;
      t.feedback_window = consume(op.out_a);
    }
    out.agents.push_back(std::move(t));
    ++s;
  }
  if (s % 2 != 0) filler();
  out.slots = s;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<bool> encoder_input_bits(const std::vector<Rational>& ce_cuts,
                                     const std::vector<BlanketState>& blanket_states,
                                     const ReductionParams& params, long long band_lo,
                                     long long band_hi, const Rational& shift) {
  params.validate();
  const int n = params.n;
  if (blanket_states.size() != static_cast<std::size_t>(n) - 1) {
    throw ValidationError("encoder_input_bits: one blanket state per sensor 2..n");
  }
  std::vector<Rational> cuts = ce_cuts;
  std::sort(cuts.begin(), cuts.end());
  const long long p_huge = params.p_huge();
  const long long per = p_huge / n;

  std::vector<bool> bits;
  auto gap_bit = [&](const Rational& pos) {
    const auto it = std::upper_bound(cuts.begin(), cuts.end(), pos);
    return (it - cuts.begin()) % 2 == 1;
  };
  for (int w = 0; w < n; ++w) {
    for (long long t = band_lo; t < band_hi; ++t) {
      bits.push_back(gap_bit(Rational(w * per + t) * params.delta_tiny + shift));
    }
  }
  for (int j = 2; j <= n; ++j) {
    const long long slot = p_huge + (j - 2);
    const bool entry_plus = (n + slot) % 2 == 0;
    const BlanketState st = blanket_states[static_cast<std::size_t>(j) - 2];
    switch (st) {
      case BlanketState::ACTIVE_PLUS:
        bits.push_back(false);
        bits.push_back(false);
        break;
      case BlanketState::ACTIVE_MINUS:
        bits.push_back(true);
        bits.push_back(true);
        break;
      case BlanketState::INACTIVE:
        bits.push_back(entry_plus);
        bits.push_back(!entry_plus);
        break;
    }
  }
  bits.push_back(gap_bit(shift));  // x_REF
  return bits;
}

BooleanCircuit build_encoder_logic(const NVHDTInstance& inst, const ReductionParams& params,
                                   long long* read_stride, long long* band_lo,
                                   long long* band_hi) {
  params.validate();
  if (inst.n != params.n) {
    throw ValidationError("encoder logic: instance dimension mismatch");
  }
  if (params.delta_tiny > Rational(Int(1), Int(1) << params.frac_bits)) {
    throw ValidationError("sensor pitch does not resolve the compiled fixed-point grid");
  }
  const int n = params.n;
  const BandSpec band = read_band(params);
  const long long band_size = band.hi - band.lo;

  CircuitBuilder b;

  std::vector<std::vector<int>> gap(static_cast<std::size_t>(n));
  for (auto& g : gap) {
    g.reserve(static_cast<std::size_t>(band_size));
    for (long long t = 0; t < band_size; ++t) g.push_back(b.input());
  }
  std::vector<std::pair<int, int>> blanket;
  for (int j = 2; j <= n; ++j) blanket.emplace_back(b.input(), b.input());
  const int x_ref = b.input();

  // Window counts. A banded sensor's gap bit is the parity of the cuts at or
  // left of its block, so within window w (1-based) the bit equals
  // parity(w-1) xor [cut <= pos]; counting sensors strictly left of the cut
  // inverts accordingly.
  std::vector<CircuitBuilder::Num> counts(static_cast<std::size_t>(n));
  CircuitBuilder::Num last_right_count;  // only window n's is ever consumed
  for (int w = 0; w < n; ++w) {
    std::vector<int> left;
    std::vector<int> right;
    left.reserve(gap[static_cast<std::size_t>(w)].size());
    for (int bit : gap[static_cast<std::size_t>(w)]) {
      const int is_right = w % 2 == 0 ? bit : b.not_(bit);  // [cut <= pos]
      right.push_back(is_right);
      left.push_back(b.not_(is_right));
    }
    counts[static_cast<std::size_t>(w)] = b.popcount(std::move(left));
    if (w == n - 1) last_right_count = b.popcount(std::move(right));
  }

  // Axis 1 walls. With q_w = band_lo + c_w and P = 1/delta_tiny,
  //   tau > theta_c  <=>  y_1 > theta_c (y_1 + n - y_n)
  //                  <=>  7d(2q_1 - 1) > (7d + 2a(2c-7)) (q_1 - q_n + P)
  // for delta_T = a/d, using y_1 = (q_1 - 1/2) dt and n - y_n = 1 - (q_n - 1/2) dt.
  // q_1 - q_n + P is positive and shared by all six walls, as is the left side.
  std::vector<int> axis1_walls;
  {
    const Int a = numerator(params.delta_T);
    const Int d = denominator(params.delta_T);
    const long long p = (Rational(1) / params.delta_tiny).convert_to<long long>();
    // m = q_1 - q_n + P = (P - band_size) + c_1 + (in-band sensors right of cut n)
    CircuitBuilder::Num m = b.add(counts[0], last_right_count);
    m = b.add_const(m, Int(p - band_size));
    const CircuitBuilder::Num base = b.mul_const(m, 7 * d);
    // left side: 7d(2q_1 - 1) = 14d c_1 + 7d(2 band_lo - 1)
    const CircuitBuilder::Num lhs_var = b.mul_const(counts[0], 14 * d);
    const Int lhs_const = 7 * d * (2 * band.lo - 1);
    for (int c = 1; c <= 6; ++c) {
      const Int tilt = 2 * a * (2 * c - 7);  // negative for c <= 3
      CircuitBuilder::Num lhs = lhs_var;
      CircuitBuilder::Num rhs = base;
      Int rhs_const = -lhs_const;
      if (tilt >= 0) {
        rhs = b.add(rhs, b.mul_const(m, tilt));
      } else {
        lhs = b.add(lhs, b.mul_const(m, -tilt));
      }
      if (rhs_const >= 0) {
        rhs = b.add_const(rhs, rhs_const);
      } else {
        lhs = b.add_const(lhs, -rhs_const);
      }
      axis1_walls.push_back(b.gt(lhs, rhs));
    }
  }

  // Axes 2..n: the decoded coordinate is linear in the counts,
  //   alpha_J = (2/n^2) sum_k (J - 1 - n [k <= J-1]) v_k,
  // exact on the n = 2 chart and at tau = 1/2 in general. The coefficients
  // sum to zero, so the -1/2 offsets cancel and only band_lo shifts remain.
  std::vector<std::array<int, 7>> digits(static_cast<std::size_t>(n));
  digits[0] = one_hot_digits(b, axis1_walls);
  std::vector<std::pair<int, int>> beyond;  // per axis J = 2..n: (alpha > dT, alpha < -dT)
  for (int axis = 2; axis <= n; ++axis) {
    LinForm f;
    f.coef.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
      const Rational coef = Rational(2 * ((axis - 1) - n * (k <= axis - 1 ? 1 : 0)), n * n) *
                            params.delta_tiny;
      f.coef[static_cast<std::size_t>(k) - 1] = coef;
      f.cst += coef * band.lo;
    }
    std::vector<Rational> walls;
    for (int c = 1; c <= 6; ++c) walls.push_back(params.delta_T * (2 * c - 7) / 7);
    walls.push_back(params.delta_T);  // strictly beyond the tunnel, minus colour
    const std::vector<int> bits = compile_wall_tests(b, f, walls, counts);
    digits[static_cast<std::size_t>(axis) - 1] =
        one_hot_digits(b, std::vector<int>(bits.begin(), bits.begin() + 6));
    // [alpha < -dT] needs its own strict test; hash-consing shares the
    // mirrored accumulators with the first compilation.
    LinForm neg;
    neg.coef.reserve(f.coef.size());
    for (const auto& r : f.coef) neg.coef.push_back(-r);
    neg.cst = -f.cst;
    const int below = compile_wall_tests(b, neg, {params.delta_T}, counts)[0];
    beyond.emplace_back(bits[6], below);
  }

  // Cubelet table splice: one minterm per cell over the digit one-hots,
  // or-folded into its colour's wire. Shared digit prefixes are deduplicated
  // by the recursion order.
  std::vector<int> tunnel(static_cast<std::size_t>(2 * n), b.constant(false));
  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  const std::function<void(int, int)> splice = [&](int axis, int prefix) {
    if (axis == n) {
      const int colour = inst.colour_at_cubelet(idx);
      const std::size_t out_i = colour > 0 ? static_cast<std::size_t>(2 * (colour - 1))
                                           : static_cast<std::size_t>(2 * (-colour - 1) + 1);
      tunnel[out_i] = b.or_(tunnel[out_i], prefix);
      return;
    }
    for (int c = 0; c < 7; ++c) {
      idx[static_cast<std::size_t>(axis)] = c;
      splice(axis + 1,
             b.and_(prefix, digits[static_cast<std::size_t>(axis)][static_cast<std::size_t>(c)]));
    }
  };
  splice(0, b.constant(true));

  // Outer override: any coordinate beyond the tunnel switches to the
  // away-from-it colour on its own axis and zero elsewhere.
  int outer_any = b.constant(false);
  for (const auto& [bp, bm] : beyond) outer_any = b.or_(outer_any, b.or_(bp, bm));
  std::vector<int> base(static_cast<std::size_t>(2 * n));
  const int in_tunnel = b.not_(outer_any);
  base[0] = b.and_(in_tunnel, tunnel[0]);
  base[1] = b.and_(in_tunnel, tunnel[1]);
  for (int k = 2; k <= n; ++k) {
    const auto& [bp, bm] = beyond[static_cast<std::size_t>(k) - 2];
    base[static_cast<std::size_t>(2 * k) - 2] =
        b.mux(outer_any, bm, tunnel[static_cast<std::size_t>(2 * k) - 2]);
    base[static_cast<std::size_t>(2 * k) - 1] =
        b.mux(outer_any, bp, tunnel[static_cast<std::size_t>(2 * k) - 1]);
  }

  // Blanket overrides on their own axes.
  for (int j = 2; j <= n; ++j) {
    const auto& [bl, br] = blanket[static_cast<std::size_t>(j) - 2];
    const int active_plus = b.and_(b.not_(bl), b.not_(br));
    const int active_minus = b.and_(bl, br);
    const int inactive = b.xor_(bl, br);
    const bool toward_plus = j % 2 == 1;
    const int plus_src = toward_plus ? active_plus : active_minus;
    const int minus_src = toward_plus ? active_minus : active_plus;
    auto& plus = base[static_cast<std::size_t>(2 * j) - 2];
    auto& minus = base[static_cast<std::size_t>(2 * j) - 1];
    plus = b.or_(b.and_(inactive, plus), plus_src);
    minus = b.or_(b.and_(inactive, minus), minus_src);
  }

  // Reference-parity stage: (0,0) -> (1,0); a winner becomes (v,v) with
  // v = value xor x_REF.
  std::vector<int> outs;
  const int nx = b.not_(x_ref);
  for (int k = 1; k <= n; ++k) {
    const int a = base[static_cast<std::size_t>(2 * k) - 2];
    const int bb = base[static_cast<std::size_t>(2 * k) - 1];
    const int v = b.or_(b.and_(a, nx), b.and_(bb, x_ref));
    outs.push_back(b.or_(b.and_(b.not_(a), b.not_(bb)), v));
    outs.push_back(v);
  }

  BooleanCircuit circuit = prune_dead(b.take(std::move(outs)));
  circuit.validate();
  if (read_stride != nullptr) *read_stride = 1;
  if (band_lo != nullptr) *band_lo = band.lo;
  if (band_hi != nullptr) *band_hi = band.hi;
  return circuit;
}

BuiltReduction build_reduction(const NVHDTInstance& inst, const ReductionParams& params) {
  params.validate();
  inst.validate();
  BuiltReduction out;
  out.encoder_logic =
      build_encoder_logic(inst, params, &out.read_stride, &out.band_lo, &out.band_hi);

  Expansion e = expand_circuit(out.encoder_logic, params,
                               BandSpec{out.band_lo, out.band_hi});
  Placement placed = place_ops(e, params);

  const int n = params.n;
  out.layout.n = n;
  out.layout.p_C = params.p_C;
  out.layout.slots_per_encoder = placed.slots;
  out.layout.sensor_block_width = params.delta_tiny / params.p_C;
  out.layout.validate();
  const Rational L = out.layout.domain_length();

  std::vector<StepMeasure> encoder_agents;
  std::vector<AgentInfo> encoder_roles;
  encoder_agents.reserve(static_cast<std::size_t>(params.p_C) * placed.agents.size());
  encoder_roles.reserve(encoder_agents.size());
  std::vector<std::vector<GadgetBlock>> ce_blocks(static_cast<std::size_t>(n));
  const Rational feedback_mass = rat(1, 2 * params.p_C);

  for (int i = 1; i <= params.p_C; ++i) {
    const Rational off = out.layout.region_lo(i);
    for (const AgentTemplate& t : placed.agents) {
      switch (t.role) {
        case AgentRole::SENSOR:
          encoder_agents.push_back(build_sensor_agent(i, t.index, params, out.layout, t.slot));
          break;
        case AgentRole::BLANKET:
          encoder_agents.push_back(
              build_blanket_sensor(i, static_cast<int>(t.index), params, out.layout, t.slot));
          break;
        default: {
          std::vector<GadgetBlock> blocks = t.blocks;
          for (GadgetBlock& bl : blocks) {
            bl.lo += off;
            bl.hi += off;
          }
          encoder_agents.push_back(measure_from_gadget(L, std::move(blocks)));
          if (t.role == AgentRole::DRIVER) {
            const Rational len = t.feedback_window.hi - t.feedback_window.lo;
            const Rational lo = off + t.feedback_window.lo + len / 4;
            const Rational hi = off + t.feedback_window.hi - len / 4;
            const std::size_t agent = static_cast<std::size_t>(std::llabs(t.feedback_colour)) - 1;
            out.feedback.blocks.push_back(
                FeedbackBlock{static_cast<int>(agent), i, t.feedback_colour, lo, hi});
            ce_blocks[agent].push_back(GadgetBlock{lo, hi, feedback_mass, BlockKind::FEEDBACK});
          }
          break;
        }
      }
      encoder_roles.push_back(AgentInfo{t.role, i, t.slot, t.index});
    }
  }

  out.instance.L = L;
  out.instance.epsilon = params.epsilon();
  out.instance.ce_region_length = n;
  out.instance.agents.reserve(static_cast<std::size_t>(n) + encoder_agents.size());
  out.roles.reserve(out.instance.agents.capacity());
  for (int k = 1; k <= n; ++k) {
    out.instance.agents.push_back(
        measure_from_gadget(L, std::move(ce_blocks[static_cast<std::size_t>(k) - 1])));
    out.roles.push_back(AgentInfo{AgentRole::CE, 0, -1, k});
  }
  for (std::size_t i = 0; i < encoder_agents.size(); ++i) {
    out.instance.agents.push_back(std::move(encoder_agents[i]));
    out.roles.push_back(encoder_roles[i]);
  }
  out.instance.validate();
  return out;
}

}  // namespace reductions
