fn main() {
    // CLI wired up in a later layer; keeps the bin target building.
}
