int main() { return 0; }
// placeholder, replaced when the real entry point lands
