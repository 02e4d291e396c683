#pragma once

#include "schreier/closed_form.hpp"
#include "schreier/detect.hpp"
#include "schreier/enumerate.hpp"
#include "schreier/finite_set.hpp"
#include "schreier/io.hpp"
#include "schreier/numeric.hpp"
#include "schreier/partition.hpp"
#include "schreier/recurrence.hpp"
#include "schreier/sequence_table.hpp"
