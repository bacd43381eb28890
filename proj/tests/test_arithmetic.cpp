// Copyright 2026 The qshear Authors
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

#include <gtest/gtest.h>

#include <random>

#include "qshear/arithmetic.hpp"
#include "qshear/error.hpp"

namespace qshear {
namespace {

void expect_matches(CircuitKind kind, const Netlist& nl, unsigned n, unsigned m,
                    const Operands& ops) {
  const auto gate = run_gate_level(kind, nl, n, m, ops);
  EXPECT_EQ(gate.value, eval_semantic(kind, n, m, ops))
      << to_string(kind) << " n=" << n << " m=" << m << " a=" << ops.a
      << " b=" << ops.b << " c=" << ops.control;
  EXPECT_TRUE(gate.ancillae_clean) << to_string(kind);
  EXPECT_TRUE(gate.operands_preserved) << to_string(kind);
}

TEST(Semantic, ReferenceValues) {
  EXPECT_EQ(eval_semantic(CircuitKind::kAdder, 4, 0, {9, 12}), 21U);
  EXPECT_EQ(eval_semantic(CircuitKind::kSubtractor, 4, 0, {9, 12}), 3U);
  EXPECT_EQ(eval_semantic(CircuitKind::kSubtractor, 4, 0, {12, 9}), 29U);
  EXPECT_EQ(eval_semantic(CircuitKind::kSelfAdder, 3, 0, {6}), 12U);
  EXPECT_EQ(eval_semantic(CircuitKind::kCtrlMulti, 4, 5, {21, 11, true}), 231U);
  EXPECT_EQ(eval_semantic(CircuitKind::kCtrlMulti, 4, 5, {21, 11, false}), 0U);
  EXPECT_EQ(eval_semantic(CircuitKind::kInterpolation, 4, 0, {10, 10}), 11U);
  EXPECT_EQ(eval_semantic(CircuitKind::kInterpolation, 4, 0, {10, 7}), 10U);
  EXPECT_EQ(eval_semantic(CircuitKind::kInterpolation, 4, 0, {15, 8}), 16U);
}

TEST(Semantic, RejectsOversizedOperands) {
  EXPECT_THROW(eval_semantic(CircuitKind::kAdder, 3, 0, {8, 0}), ParameterError);
  EXPECT_THROW(eval_semantic(CircuitKind::kInterpolation, 3, 0, {1, 16}),
               ParameterError);
  EXPECT_THROW(eval_semantic(CircuitKind::kAdder, 0, 0, {}), ParameterError);
}

TEST(WorkedExamples, SelfAdderDoubles110) {
  const Netlist nl = build_self_adder(3);
  const auto r = run_gate_level(CircuitKind::kSelfAdder, nl, 3, 0, {0b110});
  EXPECT_EQ(r.value, 0b1100U);
}

TEST(WorkedExamples, CtrlMulti10101Times1011) {
  const Netlist nl = build_ctrl_multi(4, 5);
  const auto on = run_gate_level(CircuitKind::kCtrlMulti, nl, 4, 5,
                                 {0b10101, 0b1011, true});
  EXPECT_EQ(on.value, 0b11100111U);
  EXPECT_TRUE(on.ancillae_clean);
  const auto off = run_gate_level(CircuitKind::kCtrlMulti, nl, 4, 5,
                                  {0b10101, 0b1011, false});
  EXPECT_EQ(off.value, 0U);
  EXPECT_TRUE(off.ancillae_clean);
}

TEST(WorkedExamples, InterpolationRounds1010Point1010) {
  const Netlist nl = build_interpolation(4);
  const auto r = run_gate_level(CircuitKind::kInterpolation, nl, 4, 0,
                                {0b1010, 0b1010});
  EXPECT_EQ(r.value, 0b1011U);
}

TEST(Exhaustive, AdderAndSubtractorUpToFourBits) {
  for (unsigned n = 1; n <= 4; ++n) {
    const Netlist add = build_adder(n);
    const Netlist sub = build_subtractor(n);
    for (std::uint64_t a = 0; a < (1U << n); ++a) {
      for (std::uint64_t b = 0; b < (1U << n); ++b) {
        expect_matches(CircuitKind::kAdder, add, n, 0, {a, b});
      }
      for (std::uint64_t b = 0; b < (2U << n); ++b) {
        expect_matches(CircuitKind::kSubtractor, sub, n, 0, {a, b});
      }
    }
  }
}

TEST(Exhaustive, SelfAdderUpToFourBits) {
  for (unsigned n = 1; n <= 4; ++n) {
    const Netlist nl = build_self_adder(n);
    for (std::uint64_t a = 0; a < (1U << n); ++a) {
      expect_matches(CircuitKind::kSelfAdder, nl, n, 0, {a});
    }
  }
}

TEST(Exhaustive, CtrlMultiUpToFourBits) {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned m = 1; m <= 4; ++m) {
      const Netlist nl = build_ctrl_multi(n, m);
      for (std::uint64_t a = 0; a < (1U << m); ++a) {
        for (std::uint64_t x = 0; x < (1U << n); ++x) {
          expect_matches(CircuitKind::kCtrlMulti, nl, n, m, {a, x, true});
          expect_matches(CircuitKind::kCtrlMulti, nl, n, m, {a, x, false});
        }
      }
    }
  }
}

TEST(Exhaustive, InterpolationUpToFourBits) {
  for (unsigned n = 1; n <= 4; ++n) {
    const Netlist nl = build_interpolation(n);
    for (std::uint64_t a = 0; a < (1U << n); ++a) {
      for (std::uint64_t f = 0; f < 16; ++f) {
        expect_matches(CircuitKind::kInterpolation, nl, n, 0, {a, f});
      }
    }
  }
}

TEST(Randomized, AllCircuitsFiveToEightBits) {
  std::mt19937_64 rng(0xC0FFEE);
  for (unsigned n = 5; n <= 8; ++n) {
    const unsigned m = n;
    const Netlist add = build_adder(n);
    const Netlist sub = build_subtractor(n);
    const Netlist dbl = build_self_adder(n);
    const Netlist mul = build_ctrl_multi(n, m);
    const Netlist itp = build_interpolation(n);
    std::uniform_int_distribution<std::uint64_t> op(0, (1U << n) - 1);
    std::uniform_int_distribution<std::uint64_t> wide(0, (2U << n) - 1);
    std::uniform_int_distribution<std::uint64_t> frac(0, 15);
    std::bernoulli_distribution ctl(0.75);
    for (int i = 0; i < 1000; ++i) {
      const auto a = op(rng), b = op(rng);
      expect_matches(CircuitKind::kAdder, add, n, 0, {a, b});
      expect_matches(CircuitKind::kSubtractor, sub, n, 0, {a, wide(rng)});
      expect_matches(CircuitKind::kSelfAdder, dbl, n, 0, {a});
      expect_matches(CircuitKind::kCtrlMulti, mul, n, m, {a, b, ctl(rng)});
      expect_matches(CircuitKind::kInterpolation, itp, n, 0, {a, frac(rng)});
    }
  }
}

TEST(GateCounts, CoreCountsPerCircuit) {
  for (unsigned n = 2; n <= 8; ++n) {
    EXPECT_EQ(cost(build_self_adder(n)).cnot_equivalents, n);
    EXPECT_EQ(cost(build_adder(n)).cnot_equivalents, 28U * n - 12U);
    EXPECT_EQ(cost(build_subtractor(n)).cnot_equivalents, 28U * n - 12U);
    EXPECT_EQ(cost(build_interpolation(n)).cnot_equivalents, 28U * n - 11U);
  }
  // 14.5 n (n + 2m - 1) evaluated by hand for a few points.
  EXPECT_EQ(cost(build_ctrl_multi(2, 4), GateRole::kCore).cnot_equivalents, 261U);
  EXPECT_EQ(cost(build_ctrl_multi(2, 5), GateRole::kCore).cnot_equivalents, 319U);
  EXPECT_EQ(cost(build_ctrl_multi(4, 5), GateRole::kCore).cnot_equivalents, 754U);
}

TEST(GateCounts, SubtractorIsReversedAdder) {
  const Netlist add = build_adder(3);
  EXPECT_EQ(build_subtractor(3), invert(add));
}

TEST(Preconditions, DirtyOutputRegistersAreRejected) {
  const Netlist dbl = build_self_adder(3);
  EXPECT_THROW(run_gate_level(CircuitKind::kSelfAdder, dbl, 3, 0, {1}, 1),
               PreconditionError);
  const Netlist mul = build_ctrl_multi(2, 2);
  EXPECT_THROW(run_gate_level(CircuitKind::kCtrlMulti, mul, 2, 2, {1, 1}, 4),
               PreconditionError);
  const Netlist itp = build_interpolation(2);
  EXPECT_THROW(run_gate_level(CircuitKind::kInterpolation, itp, 2, 0, {1, 1}, 2),
               PreconditionError);
}

TEST(Emitters, RejectMismatchedWidths) {
  Netlist nl;
  const Register a = nl.add_register("a", 3);
  const Register b = nl.add_register("b", 3);
  EXPECT_THROW(emit_adder(nl, "x.", a, b), ParameterError);
  EXPECT_THROW(emit_self_adder(nl, a, b), ParameterError);
}

}  // namespace
}  // namespace qshear
