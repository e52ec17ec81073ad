// Umbrella header.
#pragma once

#include "ivlev/agreement.hpp"
#include "ivlev/corpus.hpp"
#include "ivlev/countermodel.hpp"
#include "ivlev/fo_semantics.hpp"
#include "ivlev/formula.hpp"
#include "ivlev/hilbert.hpp"
#include "ivlev/parser.hpp"
#include "ivlev/prop_oracle.hpp"
#include "ivlev/report.hpp"
#include "ivlev/rules.hpp"
#include "ivlev/tableau.hpp"
#include "ivlev/truth_value.hpp"
