#pragma once

// Trellis-coded quantization: convolutional-code trellises, coset labelings,
// lattice and finite-alphabet codebooks, the Viterbi encoder, and the
// Monte-Carlo experiment harness built on top of them.

#include "tcq/alphabet_opt.hpp"
#include "tcq/codebook.hpp"
#include "tcq/conv_code.hpp"
#include "tcq/encoder.hpp"
#include "tcq/estimate.hpp"
#include "tcq/experiment.hpp"
#include "tcq/labeling.hpp"
#include "tcq/parallel.hpp"
#include "tcq/report.hpp"
#include "tcq/rng.hpp"
#include "tcq/sources.hpp"
#include "tcq/version.hpp"
