#include <cstdio>

int main() {
  std::puts("infermeter: cli under construction");
  return 2;
}
