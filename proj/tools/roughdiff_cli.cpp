// placeholder; full CLI lands after the library settles
int main() { return 0; }
