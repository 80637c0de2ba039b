#include "eqmf/version.hpp"

namespace eqmf {

const char* version() { return EQMF_VERSION; }

}  // namespace eqmf
