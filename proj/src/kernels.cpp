#include "ivnsoft/kernels.hpp"

namespace ivnsoft::kernels {

bool openmp_enabled() noexcept {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

}  // namespace ivnsoft::kernels
