#include "exlab/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace exlab::kernels {

const Table& active() {
  static const Table* selected = [] {
    if (const char* env = std::getenv("EXLAB_KERNELS")) {
      if (std::string_view(env) == "scalar") return &scalar_table();
    }
    if (const Table* avx = avx2_table()) return avx;
    return &scalar_table();
  }();
  return *selected;
}

}  // namespace exlab::kernels
