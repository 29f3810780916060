#include "exciteq/pauli.hpp"
int main() { return 0; }
