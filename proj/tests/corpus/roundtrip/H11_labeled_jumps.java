class H11_labeled_jumps {
    int firstPairSum(int[][] grid, int want) {
        outer:
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[r].length; c++) {
                if (grid[r][c] == want) {
                    break outer;
                }
                if (grid[r][c] < 0) {
                    continue outer;
                }
            }
        }
        return want;
    }
}
