#pragma once

#include "doctest.h"
#include "zzc/error.hpp"

namespace zzc::test {

// The code of the Error thrown by fn, failing the test when none is thrown.
template <class Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidInput;
}

}  // namespace zzc::test
