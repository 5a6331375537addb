#pragma once

#include "hecke/bigint.hpp"
#include "hecke/census.hpp"
#include "hecke/counting.hpp"
#include "hecke/ledger.hpp"
#include "hecke/necklace.hpp"
#include "hecke/poly.hpp"
#include "hecke/reciprocal.hpp"
#include "hecke/serialize.hpp"
#include "hecke/spectral.hpp"
#include "hecke/words.hpp"
