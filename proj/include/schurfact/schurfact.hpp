#pragma once

#include "schurfact/characters.hpp"
#include "schurfact/enumeration.hpp"
#include "schurfact/eval_point.hpp"
#include "schurfact/identities.hpp"
#include "schurfact/matrix.hpp"
#include "schurfact/partition.hpp"
#include "schurfact/rational.hpp"
