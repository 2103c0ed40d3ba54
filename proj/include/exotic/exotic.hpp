#pragma once

#include "exotic/exact_algebra.hpp"
#include "exotic/partitions.hpp"
#include "exotic/weyl_characters.hpp"
#include "exotic/fake_degrees.hpp"
#include "exotic/shoji_solver.hpp"
#include "exotic/green_tables.hpp"
#include "exotic/ff_oracle.hpp"
#include "exotic/checks.hpp"
#include "exotic/serialize.hpp"
