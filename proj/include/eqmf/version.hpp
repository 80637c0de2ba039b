#pragma once

namespace eqmf {

const char* version();

}  // namespace eqmf
