#pragma once
/**
 * @file gwfloor.hpp
 * @brief Umbrella header.
 */

#include "gwfloor/counting.hpp"
#include "gwfloor/degree.hpp"
#include "gwfloor/floor_diagram.hpp"
#include "gwfloor/gw_ring.hpp"
#include "gwfloor/merged_diagram.hpp"
#include "gwfloor/multiplicity.hpp"
#include "gwfloor/output_record.hpp"
#include "gwfloor/reference_counts.hpp"
#include "gwfloor/twin_tree.hpp"
#include "gwfloor/verification.hpp"
