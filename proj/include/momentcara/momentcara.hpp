#ifndef MOMENTCARA_MOMENTCARA_HPP
#define MOMENTCARA_MOMENTCARA_HPP

#include "momentcara/binomial.hpp"
#include "momentcara/descartes.hpp"
#include "momentcara/error.hpp"
#include "momentcara/flat.hpp"
#include "momentcara/hilbert.hpp"
#include "momentcara/moments.hpp"
#include "momentcara/moments_io.hpp"
#include "momentcara/multi_index.hpp"
#include "momentcara/rational.hpp"
#include "momentcara/rational_matrix.hpp"
#include "momentcara/recover.hpp"
#include "momentcara/semigroup.hpp"
#include "momentcara/witness.hpp"

#endif // MOMENTCARA_MOMENTCARA_HPP
