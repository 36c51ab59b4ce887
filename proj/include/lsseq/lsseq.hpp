#pragma once

// Generalized van der Corput (LS-) sequences: exact field arithmetic, the
// LS-radical inverse, partition refinement, discrepancy and QMC experiments.

#include "lsseq/counting.hpp"
#include "lsseq/digits.hpp"
#include "lsseq/discrepancy.hpp"
#include "lsseq/lambda.hpp"
#include "lsseq/partition.hpp"
#include "lsseq/psi.hpp"
#include "lsseq/qgamma.hpp"
#include "lsseq/qmc.hpp"
#include "lsseq/radical_inverse.hpp"
#include "lsseq/rational.hpp"
#include "lsseq/regime.hpp"
#include "lsseq/report.hpp"
#include "lsseq/scalar.hpp"
