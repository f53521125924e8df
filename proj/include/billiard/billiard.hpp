#pragma once

#include "billiard/chains.hpp"
#include "billiard/errors.hpp"
#include "billiard/identities.hpp"
#include "billiard/partitions.hpp"
#include "billiard/qseries.hpp"
#include "billiard/serialize.hpp"
