#ifndef SEMITRUSS_SEMITRUSS_HPP_
#define SEMITRUSS_SEMITRUSS_HPP_

#include "cancellative.hpp"
#include "cayley.hpp"
#include "census.hpp"
#include "error.hpp"
#include "inverse.hpp"
#include "io.hpp"
#include "report.hpp"
#include "structure.hpp"
#include "yang_baxter.hpp"

#endif  // SEMITRUSS_SEMITRUSS_HPP_
