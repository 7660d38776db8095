#include <catch2/catch_amalgamated.hpp>

#include "landin/bigstack.hpp"

int main(int argc, char* argv[]) {
  return landin::run_with_big_stack([&] { return Catch::Session().run(argc, argv); });
}
