#include <cstdio>

int main() {
  std::puts("landin: placeholder");
  return 0;
}
