class SweepRowSet(list):
    """Список строк прогона с выборками по статусу"""

    def successful(self):
        """Только строки, где решены обе задачи"""
        return SweepRowSet(row for row in self if row.is_successful)

    def failed(self):
        """Только строки со сбоями"""
        return SweepRowSet(row for row in self if not row.is_successful)

    def column(self, name):
        return [getattr(row, name) for row in self]

    def ordered(self):
        """По возрастанию gamma"""
        return SweepRowSet(sorted(self, key=lambda row: row.gamma))
