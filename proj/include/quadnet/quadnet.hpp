#pragma once

// Convenience header pulling in the whole library.

#include "quadnet/catalog.hpp"
#include "quadnet/discriminant.hpp"
#include "quadnet/divisor.hpp"
#include "quadnet/error.hpp"
#include "quadnet/flags.hpp"
#include "quadnet/linalg.hpp"
#include "quadnet/lp.hpp"
#include "quadnet/net.hpp"
#include "quadnet/parse.hpp"
#include "quadnet/poly.hpp"
#include "quadnet/poly_matrix.hpp"
#include "quadnet/rational.hpp"
#include "quadnet/sampling.hpp"
#include "quadnet/serialize.hpp"
#include "quadnet/stability.hpp"
