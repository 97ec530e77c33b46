/// Electric-dipole selection rule between orbital states: the matrix element
/// of any coordinate vanishes unless l changes by exactly one and m by at
/// most one. Pairs violating |m| <= l never label states and report false.
pub fn selection_allowed(l_from: u32, m_from: i32, l_to: u32, m_to: i32) -> bool {
    if m_from.unsigned_abs() > l_from || m_to.unsigned_abs() > l_to {
        return false;
    }
    let dl = i64::from(l_to) - i64::from(l_from);
    let dm = i64::from(m_to) - i64::from(m_from);
    dl.abs() == 1 && dm.abs() <= 1
}
