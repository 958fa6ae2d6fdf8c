#pragma once

#include "chainform/builders.hpp"
#include "chainform/composition.hpp"
#include "chainform/error.hpp"
#include "chainform/flag_stats.hpp"
#include "chainform/generating.hpp"
#include "chainform/incidence.hpp"
#include "chainform/integer.hpp"
#include "chainform/label_equivalence.hpp"
#include "chainform/partition.hpp"
#include "chainform/polynomial.hpp"
#include "chainform/poset.hpp"
#include "chainform/poset_io.hpp"
#include "chainform/qsym.hpp"
#include "chainform/rank_selection.hpp"
#include "chainform/rank_set.hpp"
#include "chainform/symfunc.hpp"
