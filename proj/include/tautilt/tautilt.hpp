#pragma once

#include "tautilt/algebra.hpp"
#include "tautilt/auslander_reiten.hpp"
#include "tautilt/bricks.hpp"
#include "tautilt/decompose.hpp"
#include "tautilt/explorer.hpp"
#include "tautilt/gc_vectors.hpp"
#include "tautilt/hom.hpp"
#include "tautilt/representation.hpp"
#include "tautilt/tau_tilting.hpp"
