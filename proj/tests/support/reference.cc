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

#include "support/reference.h"

#include <cmath>

namespace cminor::testing {

std::uint32_t RefMemory::alloc(std::int64_t lo, std::int64_t hi) {
  bounds_.push_back(Bounds{lo, hi, true});
  return static_cast<std::uint32_t>(bounds_.size() - 1);
}

bool RefMemory::free(std::uint32_t b) {
  if (b >= bounds_.size() || !bounds_[b].live) return false;
  bounds_[b].live = false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::int64_t>> RefMemory::check(
    Chunk ch, const Value& addr) const {
  if (!addr.is_ptr()) return std::nullopt;
  const std::uint32_t b = addr.ptr_block().index;
  if (b >= bounds_.size() || !bounds_[b].live) return std::nullopt;
  const std::int64_t ofs = addr.ptr_offset().signed_value();
  const auto size = static_cast<std::int64_t>(chunk_size(ch));
  if (ofs < bounds_[b].lo || ofs + size > bounds_[b].hi) return std::nullopt;
  if (ofs % size != 0) return std::nullopt;
  return std::make_pair(b, ofs);
}

std::optional<Value> RefMemory::load(Chunk ch, const Value& addr) const {
  auto at = check(ch, addr);
  if (!at) return std::nullopt;
  const auto size = static_cast<std::int64_t>(chunk_size(ch));
  std::optional<std::uint64_t> id;
  Value v;
  for (std::int64_t k = 0; k < size; ++k) {
    auto it = bytes_.find({at->first, at->second + k});
    if (it == bytes_.end()) return Value::undef();
    const Byte& byte = it->second;
    if (byte.chunk != ch || byte.start != at->second) return Value::undef();
    if (id && *id != byte.store_id) return Value::undef();
    id = byte.store_id;
    v = byte.value;
  }
  return v;
}

bool RefMemory::store(Chunk ch, const Value& addr, const Value& v) {
  auto at = check(ch, addr);
  if (!at) return false;
  const std::uint64_t id = next_store_++;
  const Value kept = ref_normalize(ch, v);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(chunk_size(ch)); ++k) {
    bytes_[{at->first, at->second + k}] = Byte{id, at->second, ch, kept};
  }
  return true;
}

Value ref_normalize(Chunk ch, const Value& v) {
  auto int_only = [&](std::uint32_t mask, bool sign) -> Value {
    if (!v.is_int()) return Value::undef();
    std::uint32_t bits = v.as_int().bits() & mask;
    const std::uint32_t top = (mask >> 1) + 1;
    if (sign && (bits & top)) bits |= ~mask;
    return Value::integer(Int32(bits));
  };
  switch (ch) {
    case Chunk::kInt8Signed: return int_only(0xFFu, true);
    case Chunk::kInt8Unsigned: return int_only(0xFFu, false);
    case Chunk::kInt16Signed: return int_only(0xFFFFu, true);
    case Chunk::kInt16Unsigned: return int_only(0xFFFFu, false);
    case Chunk::kInt32:
      return v.is_int() || v.is_ptr() ? v : Value::undef();
    case Chunk::kFloat32: {
      if (!v.is_float()) return Value::undef();
      const float narrow = static_cast<float>(v.as_float());
      return Value::floating(static_cast<double>(narrow));
    }
    case Chunk::kFloat64:
      return v.is_float() ? v : Value::undef();
  }
  return Value::undef();
}

namespace {

bool defined_value(const Value& v) {
  if (v.is_int() || v.is_ptr()) return true;
  return v.is_float() && !std::isnan(v.as_float());
}

class RefChecker {
 public:
  RefChecker(const GlobalEnv& genv, const State& s, const std::vector<Value>& domain)
      : genv_(genv), s_(s), domain_(domain) {}

  bool sat(const Assertion& a, const Footprint& phi, const Env& env) {
    switch (a.kind) {
      case AssertionKind::kEmp:
        return phi.empty();
      case AssertionKind::kAnd:
        return sat(*a.left, phi, env) && sat(*a.right, phi, env);
      case AssertionKind::kOr:
        return sat(*a.left, phi, env) || sat(*a.right, phi, env);
      case AssertionKind::kImp:
        return !sat(*a.left, phi, env) || sat(*a.right, phi, env);
      case AssertionKind::kNot:
        return !sat(*a.left, phi, env);
      case AssertionKind::kExists:
        for (const Value& v : domain_) {
          Env inner = env;
          inner[a.binder] = v;
          if (sat(*a.left, phi, inner)) return true;
        }
        return false;
      case AssertionKind::kStar:
        return star(a, phi, env);
      case AssertionKind::kProp: {
        auto v = eval(*a.e1, env);
        return v && is_true(*v);
      }
      case AssertionKind::kEval: {
        if (!phi.empty()) return false;
        auto v = eval(*a.e1, env);
        if (!v) return false;
        if (!a.term.is_logic) return *v == a.term.value;
        auto it = env.find(a.term.name);
        return it != env.end() && *v == it->second;
      }
      case AssertionKind::kExpr: {
        if (!phi.empty()) return false;
        auto v = eval(*a.e1, env);
        return v && is_true(*v);
      }
      case AssertionKind::kDefined: {
        if (!phi.empty()) return false;
        auto v = eval(*a.e1, env);
        return v && defined_value(*v);
      }
      case AssertionKind::kMapsto: {
        auto p = eval(*a.e1, env);
        auto c = eval(*a.e2, env);
        if (!p || !c || !p->is_ptr() || !defined_value(*c)) return false;
        Footprint cell;
        for (std::size_t k = 0; k < chunk_size(a.chunk); ++k) {
          cell.set(Address{p->ptr_block(), p->ptr_offset().signed_value() +
                                                static_cast<std::int64_t>(k)},
                   Share::full());
        }
        if (!(phi == cell)) return false;
        auto got = s_.mem.load(a.chunk, *p);
        return got && *got == *c;
      }
    }
    return false;
  }

 private:
  std::optional<Value> eval(const Expr& e, const Env& env) const {
    EvalContext ctx{s_.sp, &s_.rho, nullptr, &s_.mem, &env};
    return evaluate(genv_, ctx, e).value;
  }

  bool star(const Assertion& a, const Footprint& phi, const Env& env) {
    std::vector<std::pair<Address, Share>> entries(phi.entries().begin(), phi.entries().end());
    std::vector<int> choice(entries.size(), 0);
    for (;;) {
      Footprint left, right;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& [addr, sh] = entries[i];
        if (choice[i] == 0) left.set(addr, sh);
        if (choice[i] == 1) right.set(addr, sh);
        if (choice[i] == 2) {
          left.set(addr, sh.halved());
          right.set(addr, sh.halved());
        }
      }
      if (sat(*a.left, left, env) && sat(*a.right, right, env)) return true;
      std::size_t i = 0;
      while (i < choice.size() && ++choice[i] == 3) choice[i++] = 0;
      if (i == choice.size()) return false;
    }
  }

  const GlobalEnv& genv_;
  const State& s_;
  const std::vector<Value>& domain_;
};

}  // namespace

bool ref_satisfies(const GlobalEnv& genv, const State& s, const Assertion& a,
                   const Env& logic_env, const std::vector<Value>& domain) {
  RefChecker c(genv, s, domain);
  return c.sat(a, s.phi, logic_env);
}

}  // namespace cminor::testing
