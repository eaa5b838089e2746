#pragma once

// Umbrella header: formal orthogonal and amicable pairs from finite-group
// data via induced projective monomial representations.

#include "fop/cocycle.hpp"
#include "fop/constructions.hpp"
#include "fop/errors.hpp"
#include "fop/formal.hpp"
#include "fop/group.hpp"
#include "fop/hom_basis.hpp"
#include "fop/induced.hpp"
#include "fop/matrices.hpp"
#include "fop/rational.hpp"
#include "fop/report.hpp"
#include "fop/rng.hpp"
#include "fop/scenario_io.hpp"
#include "fop/signed_perm.hpp"
