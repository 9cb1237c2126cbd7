// Acceptance suite: placeholder until the unit layers are green.
#include <cstdio>

int main() {
  std::printf("acceptance: pending\n");
  return 1;
}
