fn main() {
    std::process::exit(dihom::cli::main_entry());
}
