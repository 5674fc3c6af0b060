// Umbrella header for the contract-checked divide-and-conquer sorting
// library.
#pragma once

#include "contracts.hpp"
#include "core.hpp"
#include "counting.hpp"
#include "merge_rec.hpp"
#include "msort_iter.hpp"
#include "msort_rec.hpp"
#include "mutation.hpp"
#include "quicksort.hpp"
#include "schema.hpp"
#include "trace.hpp"
