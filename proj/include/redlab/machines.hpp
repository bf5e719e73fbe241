#pragma once

#include "redlab/machina.hpp"

// Small machines shipped with the workbench: binary-function machines for the
// padded-evaluation pipeline, recognizers, oracle machines, and clocked
// adversaries for the supersparse diagonalization.
namespace redlab::machines {

// g(x,n) = x + n; runtime x + n + 2 on input 1^x 0 1^n.
machina::Machine unary_sum();

// g(x,n) = 0 for even x, n + 1 for odd x; runtime x + n + 2 / x + n + 3.
machina::Machine unary_parity_gate();

// Single tape, halts immediately; output = input.
machina::Machine echo();

// Never halts (runs right forever).
machina::Machine forever();

// Three tapes; accepts (outputs 1) iff the input is a palindrome.
machina::Machine palindrome();

// Oracle machine that outputs oracle bit p; use = p + 1.
machina::Machine oracle_bit(int p);

// Oracle machine that never queries; outputs 1. use = 0.
machina::Machine oracle_ignore();

// Oracle machine computing l -> oracle(l) for unary input 1^l; use = l + 1.
machina::Machine oracle_identity();

// Clocked adversaries over {0}* inputs.
machina::ClockedMachine reject_all();
machina::ClockedMachine accept_all();
machina::ClockedMachine accept_even_length();

}  // namespace redlab::machines
