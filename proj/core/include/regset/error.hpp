#pragma once

#include <stdexcept>
#include <string>

namespace regset {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw error(msg);
}

}  // namespace regset
