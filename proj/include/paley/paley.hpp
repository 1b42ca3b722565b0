#pragma once

#include "paley/common.hpp"
#include "paley/field.hpp"
#include "paley/cyclotomic.hpp"
#include "paley/characters.hpp"
#include "paley/hypergeometric.hpp"
#include "paley/identities.hpp"
#include "paley/orbits.hpp"
#include "paley/digraph.hpp"
#include "paley/formulas.hpp"
#include "paley/ramsey.hpp"
