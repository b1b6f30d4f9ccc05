#pragma once

#include "walls/closed_forms.hpp"
#include "walls/exact_arith.hpp"
#include "walls/families.hpp"
#include "walls/memo_table.hpp"
#include "walls/poset.hpp"
#include "walls/series.hpp"
#include "walls/tree_child.hpp"
#include "walls/wall_tables.hpp"
