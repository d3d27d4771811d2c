// (C) Copyright 2026 antiflat developers.
//
// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#pragma once

#include <stdexcept>
#include <string>

namespace antiflat {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ANTIFLAT_ERROR_TYPE(Name)        \
  class Name : public Error {            \
   public:                               \
    using Error::Error;                  \
  };

ANTIFLAT_ERROR_TYPE(NotAProbabilityVector)
ANTIFLAT_ERROR_TYPE(AlphaOne)
ANTIFLAT_ERROR_TYPE(BadIndexOrder)
ANTIFLAT_ERROR_TYPE(DimMismatch)
ANTIFLAT_ERROR_TYPE(DimTooSmall)
ANTIFLAT_ERROR_TYPE(BadShape)
ANTIFLAT_ERROR_TYPE(BadDims)
ANTIFLAT_ERROR_TYPE(BadInterval)
ANTIFLAT_ERROR_TYPE(NonOrthonormalBasis)
ANTIFLAT_ERROR_TYPE(EigenFailure)
ANTIFLAT_ERROR_TYPE(SVDFailure)
ANTIFLAT_ERROR_TYPE(NoConvergence)
ANTIFLAT_ERROR_TYPE(SupportMismatch)
ANTIFLAT_ERROR_TYPE(ZeroWeight)
ANTIFLAT_ERROR_TYPE(InfeasiblePurity)
ANTIFLAT_ERROR_TYPE(OutOfSupport)
ANTIFLAT_ERROR_TYPE(DerivativeZero)
ANTIFLAT_ERROR_TYPE(ChainNotConverged)
ANTIFLAT_ERROR_TYPE(PreconditionUnmet)

#undef ANTIFLAT_ERROR_TYPE

}  // namespace antiflat
