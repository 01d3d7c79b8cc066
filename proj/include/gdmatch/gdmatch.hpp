#pragma once

#include "gd_string.hpp"
#include "generate.hpp"
#include "trie.hpp"
#include "ledger.hpp"
#include "matcher.hpp"
#include "grover.hpp"
#include "quantum_match.hpp"
#include "complexity.hpp"
#include "engines.hpp"
#include "bench.hpp"
