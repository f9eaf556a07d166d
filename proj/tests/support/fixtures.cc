// Copyright 2026 The Cminor Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "support/fixtures.h"

#include <cmath>
#include <limits>
#include <set>

namespace cminor::testing {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

namespace {

constexpr Chunk kChunks[] = {Chunk::kInt8Signed,    Chunk::kInt8Unsigned,
                             Chunk::kInt16Signed,   Chunk::kInt16Unsigned,
                             Chunk::kInt32,         Chunk::kFloat32,
                             Chunk::kFloat64};

Chunk random_chunk(Rng& rng) { return kChunks[uniform(rng, 0, 6)]; }

Value small_int(Rng& rng) { return Value::integer(uniform(rng, -3, 5)); }

}  // namespace

Value random_value(Rng& rng, const Sandbox& box) {
  switch (uniform(rng, 0, 9)) {
    case 0:
      return Value::undef();
    case 1:
    case 2:
    case 3:
      return small_int(rng);
    case 4: {
      static constexpr std::uint32_t kEdges[] = {0u, 1u, 0x7FFFFFFFu, 0x80000000u,
                                                 0xFFFFFFFFu, 0xFFu, 0x100u};
      if (chance(rng, 0.5)) return Value::integer(Int32(kEdges[uniform(rng, 0, 6)]));
      return Value::integer(Int32(static_cast<std::uint32_t>(rng())));
    }
    case 5:
    case 6: {
      const BlockId b = box.data_blocks[uniform(rng, 0, static_cast<int>(box.data_blocks.size()) - 1)];
      const int ofs = chance(rng, 0.9) ? 4 * uniform(rng, 0, 3) : uniform(rng, -2, 17);
      return Value::pointer(b, ofs);
    }
    case 7: {
      auto f = box.program.find_global("f");
      return Value::pointer(*f, 0);
    }
    default: {
      static const double kFloats[] = {0.0, -0.0, 1.5, -2.25, 1e10,
                                       std::numeric_limits<double>::quiet_NaN(),
                                       std::numeric_limits<double>::infinity()};
      return Value::floating(kFloats[uniform(rng, 0, 6)]);
    }
  }
}

Sandbox random_sandbox(Rng& rng) {
  Sandbox box;
  box.program.add_global("g0", 16);
  box.program.add_global("g1", 8);
  FunDef f;
  f.name = "f";
  f.params = {"a"};
  f.result_arity = 1;
  f.body = Stmt::ret({Expr::var("a")});
  box.program.add_function(std::move(f));

  State& s = box.state;
  s.mem = box.program.initial_memory();
  box.data_blocks = {*box.program.find_global("g0"), *box.program.find_global("g1")};
  s.sp = s.mem.alloc_in_place(0, 16);
  box.data_blocks.push_back(*s.sp);
  box.vars = {"x", "y", "z", "p"};

  for (BlockId b : box.data_blocks) {
    const Block& blk = s.mem.block(b);
    for (std::int64_t ofs = blk.lo; ofs < blk.hi; ofs += 4) {
      if (chance(rng, 0.2)) continue;
      const Chunk ch = chance(rng, 0.6) ? Chunk::kInt32 : random_chunk(rng);
      const std::int64_t size = static_cast<std::int64_t>(chunk_size(ch));
      std::int64_t at = ofs - ofs % size;
      if (at + size > blk.hi) at = ofs;
      s.mem.store_in_place(ch, Value::pointer(b, static_cast<std::int32_t>(at)),
                           random_value(rng, box));
    }
    for (std::int64_t ofs = blk.lo; ofs < blk.hi; ofs += 4) {
      const int r = uniform(rng, 0, 9);
      for (std::int64_t k = 0; k < 4; ++k) {
        Share sh = r < 5 ? Share::full() : r < 7 ? Share::half() : Share::zero();
        if (r == 9) sh = chance(rng, 0.5) ? Share::full() : Share::zero();
        s.phi.set(Address{b, ofs + k}, sh);
      }
    }
  }
  for (const Ident& x : box.vars) {
    if (chance(rng, 0.9)) s.rho[x] = random_value(rng, box);
  }
  return box;
}

ExprPtr random_expr(Rng& rng, const Sandbox& box, int depth) {
  if (depth <= 0 || chance(rng, 0.3)) {
    switch (uniform(rng, 0, 7)) {
      case 0:
      case 1:
        return Expr::var(box.vars[uniform(rng, 0, static_cast<int>(box.vars.size()) - 1)]);
      case 2:
        return Expr::val(random_value(rng, box));
      case 3:
        return Expr::make_op(Op::addr_symbol(chance(rng, 0.5) ? "g0" : "g1"), {});
      case 4:
        return Expr::make_op(Op::addr_stack(Int32::from_signed(4 * uniform(rng, 0, 3))), {});
      case 5:
        return Expr::make_op(Op::float_const(chance(rng, 0.5) ? 0.5 : -3.0), {});
      default:
        return Expr::make_op(Op::int_const(Int32::from_signed(uniform(rng, -2, 8))), {});
    }
  }
  if (chance(rng, 0.2)) {
    ExprPtr addr;
    if (chance(rng, 0.7)) {
      ExprPtr base = chance(rng, 0.5)
                         ? Expr::make_op(Op::addr_symbol("g0"), {})
                         : Expr::make_op(Op::addr_stack(Int32(0)), {});
      addr = Expr::make_op(Op::simple(OpCode::kAdd),
                           {base, Expr::val(Value::integer(4 * uniform(rng, 0, 3)))});
    } else {
      addr = random_expr(rng, box, depth - 1);
    }
    const Chunk ch = chance(rng, 0.6) ? Chunk::kInt32 : random_chunk(rng);
    return Expr::load(ch, std::move(addr));
  }
  const auto code = static_cast<OpCode>(uniform(rng, static_cast<int>(OpCode::kAdd),
                                                kOpCodeCount - 1));
  std::vector<ExprPtr> args;
  for (std::size_t i = 0; i < op_arity(code); ++i) {
    args.push_back(random_expr(rng, box, depth - 1));
  }
  Op op = Op::simple(code);
  if (code == OpCode::kCmp || code == OpCode::kCmpu || code == OpCode::kCmpf) {
    op = Op::compare(code, static_cast<Comparison>(uniform(rng, 0, 5)));
  }
  return Expr::make_op(op, std::move(args));
}

State equivalent_state(Rng& rng, const State& s) {
  State t = s;
  // Rebuild the environment in a different insertion order.
  Env rho;
  for (auto it = s.rho.rbegin(); it != s.rho.rend(); ++it) rho.emplace(it->first, it->second);
  t.rho = std::move(rho);
  for (std::uint32_t b = 0; b < s.mem.blocks().size(); ++b) {
    const Block& blk = s.mem.blocks()[b];
    if (!blk.live) continue;
    for (std::int64_t ofs = blk.lo; ofs < blk.hi; ++ofs) {
      if (!s.phi.share_at(Address{BlockId{b}, ofs}).is_zero()) continue;
      if (chance(rng, 0.5)) {
        t.mem.store_in_place(Chunk::kInt8Unsigned,
                             Value::pointer(BlockId{b}, static_cast<std::int32_t>(ofs)),
                             Value::integer(uniform(rng, 0, 255)));
      }
    }
  }
  t.mem.alloc_in_place(0, uniform(rng, 0, 8));
  return t;
}

namespace {

ExprPtr cell_address(Rng& rng, const Sandbox& box) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return Expr::make_op(Op::simple(OpCode::kAdd),
                           {Expr::make_op(Op::addr_symbol("g0"), {}),
                            Expr::val(Value::integer(4 * uniform(rng, 0, 3)))});
    case 1:
      return Expr::make_op(Op::addr_stack(Int32::from_signed(4 * uniform(rng, 0, 3))), {});
    case 2:
      return Expr::var("p");
    default:
      return random_expr(rng, box, 1);
  }
}

}  // namespace

StmtPtr random_simple_stmt(Rng& rng, const Sandbox& box) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Stmt::assign(box.vars[uniform(rng, 0, 2)], random_expr(rng, box, 2));
    case 1:
      return Stmt::if_then_else(random_expr(rng, box, 2), Stmt::skip(),
                                Stmt::assign("x", Expr::val(Value::integer(1))));
    default: {
      const Chunk ch = chance(rng, 0.7) ? Chunk::kInt32 : random_chunk(rng);
      return Stmt::store(ch, cell_address(rng, box), random_expr(rng, box, 2));
    }
  }
}

StmtPtr random_control_stmt(Rng& rng, const Sandbox& box, int depth) {
  const int r = uniform(rng, 0, depth <= 0 ? 4 : 10);
  switch (r) {
    case 0:
      return Stmt::skip();
    case 1:
    case 2:
      return random_simple_stmt(rng, box);
    case 3:
      return Stmt::exit(static_cast<std::uint32_t>(uniform(rng, 0, 2)));
    case 4:
      return chance(rng, 0.5) ? Stmt::ret({}) : Stmt::skip();
    case 5:
    case 6:
      return Stmt::seq(random_control_stmt(rng, box, depth - 1),
                       random_control_stmt(rng, box, depth - 1));
    case 7:
      return Stmt::if_then_else(Expr::var(box.vars[uniform(rng, 0, 3)]),
                                random_control_stmt(rng, box, depth - 1),
                                random_control_stmt(rng, box, depth - 1));
    case 8:
    case 9:
      return Stmt::block(random_control_stmt(rng, box, depth - 1));
    default:
      return Stmt::loop(random_control_stmt(rng, box, depth - 1));
  }
}

std::vector<Rule> applicable_fig2_rules(const GlobalEnv& genv,
                                        const Continuation& k) {
  std::vector<Rule> out;
  const ControlNode& head = *k.control;
  if (head.kind != ControlKind::kSeq) return out;
  const Stmt& s = *head.stmt;
  const State& st = k.state;

  // Each rule tested on its own, in the order of the figure.
  if (s.kind == StmtKind::kSeq) out.push_back(Rule::kSeq);
  if (s.kind == StmtKind::kAssign && eval_expr(genv, st, *s.e1)) {
    out.push_back(Rule::kAssign);
  }
  if (s.kind == StmtKind::kStore) {
    auto v1 = eval_expr(genv, st, *s.e1);
    auto v2 = eval_expr(genv, st, *s.e2);
    if (v1 && v2 && allows(st.phi, *v1, s.chunk, Access::kStore) &&
        st.mem.store(s.chunk, *v1, *v2)) {
      out.push_back(Rule::kStore);
    }
  }
  if (s.kind == StmtKind::kIf) {
    auto v = eval_expr(genv, st, *s.e1);
    if (v && is_true(*v)) out.push_back(Rule::kIfTrue);
    if (v && is_false(*v)) out.push_back(Rule::kIfFalse);
  }
  if (s.kind == StmtKind::kSkip) out.push_back(Rule::kSkip);
  if (s.kind == StmtKind::kLoop) out.push_back(Rule::kLoop);
  if (s.kind == StmtKind::kBlock) out.push_back(Rule::kBlock);
  if (s.kind == StmtKind::kExit) {
    const ControlNode* c = head.next.get();
    while (c->kind == ControlKind::kSeq) c = c->next.get();
    if (c->kind == ControlKind::kBlock) {
      out.push_back(s.exit_level == 0 ? Rule::kExitZero : Rule::kExitSucc);
    }
  }
  return out;
}

namespace {

std::string node_addr(int k, int n) {
  if (k < 0 || k >= n) return "0";
  return "(&heap + " + std::to_string(8 * k) + ")";
}

std::string node_value(int k) { return std::to_string(10 * (k + 1)); }

// Node j's two cells with the given next pointer.
std::string node_cells(int j, int n, const std::string& next) {
  return node_addr(j, n) + " |->[i32] " + node_value(j) + " * (&heap + " +
         std::to_string(8 * j + 4) + ") |->[i32] " + next;
}

// The heap after `k` nodes were reversed: nodes below k point backwards,
// the others still forwards.
std::string heap_after(int k, int n) {
  std::string out;
  for (int j = 0; j < n; ++j) {
    if (!out.empty()) out += " * ";
    out += node_cells(j, n, j < k ? node_addr(j - 1, n) : node_addr(j + 1, n));
  }
  return out;
}

std::string with_heap(std::string pure, int k, int n) {
  const std::string h = heap_after(k, n);
  return h.empty() ? pure : pure + " * " + h;
}

std::string loop_case(int k, int n) {
  return "(" + with_heap("[v == " + node_addr(k, n) + "] * [w == " + node_addr(k - 1, n) + "]",
                         k, n) +
         ")";
}

}  // namespace

std::string list_reversal_source(int n, std::optional<int> drop_case) {
  std::string inv;
  for (int k = 0; k <= n; ++k) {
    if (drop_case && *drop_case == k) continue;
    if (!inv.empty()) inv += "\n      || ";
    inv += loop_case(k, n);
  }
  if (inv.empty()) inv = "false";

  std::string src;
  src += "# In-place reversal of a " + std::to_string(n) + "-node list.\n";
  src += "# Node k lives at &heap + 8k: value at +0, next pointer at +4.\n";
  src += "global heap[" + std::to_string(8 * n) + "];\n\n";
  src += "fn rev(p) : 1\n";
  src += "  requires " + with_heap("[p == " + node_addr(0, n) + "]", 0, n) + "\n";
  src += "  ensures " + with_heap("[$0 == " + node_addr(n - 1, n) + "]", n, n) + "\n";
  src += "{\n";
  src += "  locals v, w, t;\n";
  src += "  v = p;\n";
  src += "  w = 0;\n";
  src += "  block exits " + loop_case(n, n) + " {\n";
  src += "    loop invariant " + inv + " {\n";
  src += "      if (v == 0) { exit 0; }\n";
  src += "      t = i32[v + 4];\n";
  src += "      store i32[v + 4] = w;\n";
  src += "      w = v;\n";
  src += "      v = t;\n";
  src += "    }\n";
  src += "  }\n";
  src += "  return w;\n";
  src += "}\n\n";
  src += "fn main() : 1 {\n";
  src += "  locals r;\n";
  for (int k = 0; k < n; ++k) {
    src += "  store i32[&heap + " + std::to_string(8 * k) + "] = " + node_value(k) + ";\n";
    src += "  store i32[&heap + " + std::to_string(8 * k + 4) + "] = " +
           node_addr(k + 1, n) + ";\n";
  }
  src += "  (r) = call rev(" + node_addr(0, n) + ");\n";
  src += "  return r;\n";
  src += "}\n";
  return src;
}

std::optional<std::vector<std::int32_t>> walk_list(const Memory& m,
                                                   BlockId heap,
                                                   const Value& head) {
  // Reads raw cells rather than going through Memory::load.
  auto read_i32 = [&](std::int64_t ofs) -> std::optional<Value> {
    const Block& blk = m.block(heap);
    if (ofs < blk.lo || ofs + 4 > blk.hi) return std::nullopt;
    const MemCell& c0 = blk.at(ofs);
    if (!c0.initialized || c0.chunk != Chunk::kInt32 || c0.index != 0) return std::nullopt;
    for (std::int64_t i = 1; i < 4; ++i) {
      const MemCell& c = blk.at(ofs + i);
      if (!c.initialized || c.index != i || !(c.value == c0.value)) return std::nullopt;
    }
    return c0.value;
  };
  std::vector<std::int32_t> values;
  std::set<std::int64_t> seen;
  Value cur = head;
  while (!(cur.is_int() && cur.as_int() == Int32(0))) {
    if (!cur.is_ptr() || cur.ptr_block().index != heap.index) return std::nullopt;
    const std::int64_t ofs = cur.ptr_offset().signed_value();
    if (!seen.insert(ofs).second) return std::nullopt;
    auto v = read_i32(ofs);
    auto next = read_i32(ofs + 4);
    if (!v || !next || !v->is_int()) return std::nullopt;
    values.push_back(v->as_int().signed_value());
    cur = *next;
  }
  return values;
}

}  // namespace cminor::testing
